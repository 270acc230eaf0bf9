#include "pvf/reordering.hpp"

#include <algorithm>

namespace pvf {

Reordering::Reordering(const DfsTree& t, std::vector<Pos> child_order) : children_(std::move(child_order)) {
  const Pos n = t.size();
  begin_.resize(static_cast<std::size_t>(n) + 1);
  for (Pos v = 0; v <= n; ++v) begin_[v] = v < n ? t.child_begin(v) : static_cast<std::int32_t>(children_.size());
  rank_.assign(static_cast<std::size_t>(n), 0);
  number_.assign(static_cast<std::size_t>(n), 0);
  inverse_.assign(static_cast<std::size_t>(n), 0);
  // Parents precede children in base preorder, so one forward sweep assigns
  // every child its number from the parent's.
  for (Pos v = 0; v < n; ++v) {
    Pos next = number_[v] + 1;
    std::int32_t rank = 0;
    for (Pos c : children(v)) {
      rank_[c] = rank++;
      number_[c] = next;
      next += t.subtree_size(c);
    }
  }
  for (Pos v = 0; v < n; ++v) inverse_[number_[v]] = v;
}

Reordering reorder_by_low(const DfsTree& t, const LowTable& lows, std::int32_t i) {
  std::vector<Pos> order;
  order.reserve(t.size() > 0 ? static_cast<std::size_t>(t.size()) - 1 : 0);
  for (Pos v = 0; v < t.size(); ++v) {
    auto kids = t.children(v);
    std::size_t start = order.size();
    order.insert(order.end(), kids.begin(), kids.end());
    std::stable_sort(order.begin() + start, order.end(),
                     [&](Pos a, Pos b) { return low_key(lows, a, i) < low_key(lows, b, i); });
  }
  return Reordering(t, std::move(order));
}

std::vector<std::uint8_t> compute_marks(const DfsTree& t, const Graph& g, Vertex u) {
  std::vector<std::uint8_t> marks(static_cast<std::size_t>(t.size()), 0);
  for (Vertex y : g.neighbors(u)) {
    Pos w = t.position(y);
    if (w != kNoPos) marks[w] = 1;
  }
  for (Pos v = t.size() - 1; v > 0; --v) {
    if (marks[v]) marks[t.parent(v)] = 1;
  }
  return marks;
}

Reordering reorder_by_marks(const DfsTree& t, std::span<const std::uint8_t> marks) {
  std::vector<Pos> order;
  order.reserve(t.size() > 0 ? static_cast<std::size_t>(t.size()) - 1 : 0);
  for (Pos v = 0; v < t.size(); ++v) {
    auto kids = t.children(v);
    for (Pos c : kids) {
      if (!marks[c]) order.push_back(c);
    }
    for (Pos c : kids) {
      if (marks[c]) order.push_back(c);
    }
  }
  return Reordering(t, std::move(order));
}

}  // namespace pvf
