#include "pvf/dfs_tree.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "pvf/errors.hpp"

namespace pvf {

DfsTree DfsTree::build(const Graph& g, std::span<const Vertex> exclude, Vertex root) {
  const Vertex n = g.num_vertices();
  if (root < 0 || root >= n) throw InvalidRequest("DFS root " + std::to_string(root) + " out of range");

  std::vector<std::uint8_t> blocked(static_cast<std::size_t>(n), 0);
  for (Vertex x : exclude) {
    if (x >= 0 && x < n) blocked[x] = 1;
  }
  if (blocked[root]) throw InvalidRequest("DFS root " + std::to_string(root) + " is excluded");

  DfsTree t;
  t.position_.assign(static_cast<std::size_t>(n), kNoPos);

  // Explicit stack of (vertex, next neighbor index).
  std::vector<std::pair<Vertex, std::int64_t>> stack;
  stack.reserve(64);
  auto visit = [&](Vertex x, Pos parent) {
    Pos p = static_cast<Pos>(t.vertex_.size());
    t.position_[x] = p;
    t.vertex_.push_back(x);
    t.parent_.push_back(parent);
    t.depth_.push_back(parent == kNoPos ? 0 : t.depth_[parent] + 1);
    stack.emplace_back(x, 0);
  };
  visit(root, kNoPos);
  while (!stack.empty()) {
    auto& [x, next] = stack.back();
    auto nb = g.neighbors(x);
    bool descended = false;
    while (next < static_cast<std::int64_t>(nb.size())) {
      Vertex y = nb[next++];
      if (blocked[y] || t.position_[y] != kNoPos) continue;
      visit(y, t.position_[x]);
      descended = true;
      break;
    }
    if (!descended) stack.pop_back();
  }

  const Pos size = t.size();
  t.size_.assign(static_cast<std::size_t>(size), 1);
  for (Pos v = size - 1; v > 0; --v) t.size_[t.parent_[v]] += t.size_[v];

  t.child_begin_.assign(static_cast<std::size_t>(size) + 1, 0);
  for (Pos v = 1; v < size; ++v) ++t.child_begin_[t.parent_[v] + 1];
  for (Pos v = 0; v < size; ++v) t.child_begin_[v + 1] += t.child_begin_[v];
  t.children_.resize(size > 0 ? static_cast<std::size_t>(size) - 1 : 0);
  std::vector<std::int32_t> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
  for (Pos v = 1; v < size; ++v) t.children_[fill[t.parent_[v]]++] = v;
  return t;
}

std::size_t DfsTree::space_words() const {
  return parent_.size() + depth_.size() + size_.size() + vertex_.size() + position_.size() +
         child_begin_.size() + children_.size();
}

std::vector<BackEdge> back_edges(const DfsTree& t, const Graph& g, Vertex ignore) {
  std::vector<BackEdge> out;
  for (Pos v = 0; v < t.size(); ++v) {
    const Vertex x = t.vertex(v);
    if (x == ignore) continue;
    for (Vertex y : g.neighbors(x)) {
      if (y == ignore) continue;
      Pos w = t.position(y);
      // Each non-tree edge is seen from both ends; keep the descendant side.
      if (w == kNoPos || w >= v || w == t.parent(v)) continue;
      out.push_back({v, w});
    }
  }
  return out;
}

}  // namespace pvf
