#include "pvf/low_table.hpp"

#include <algorithm>

namespace pvf {

LowTable LowTable::build(const DfsTree& t, const Graph& g, std::int32_t k, Vertex ignore) {
  LowTable out;
  out.k_ = k;
  out.table_.assign(static_cast<std::size_t>(t.size()) * k, kNoPos);
  if (k <= 0) return out;

  std::vector<Pos> candidates;
  for (Pos v = t.size() - 1; v >= 0; --v) {
    candidates.clear();
    const Vertex x = t.vertex(v);
    if (x != ignore) {
      for (Vertex y : g.neighbors(x)) {
        if (y == ignore) continue;
        Pos w = t.position(y);
        if (w != kNoPos && w < v && w != t.parent(v)) candidates.push_back(w);
      }
    }
    for (Pos c : t.children(v)) {
      for (Pos w : out.row(c)) {
        if (w == kNoPos) break;
        // A child's list can only mention v as its deepest entry; everything
        // lower is already a proper ancestor of v.
        if (w != v) candidates.push_back(w);
      }
    }
    // All candidates lie on the root path of v, so preorder order is depth order.
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::size_t keep = std::min<std::size_t>(candidates.size(), static_cast<std::size_t>(k));
    std::copy_n(candidates.begin(), keep, out.table_.begin() + static_cast<std::size_t>(v) * k);
  }
  return out;
}

}  // namespace pvf
