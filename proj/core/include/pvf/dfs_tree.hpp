#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pvf/graph.hpp"

namespace pvf {

// Preorder position of a vertex in a DFS tree. Tree-side code identifies
// vertices with their positions, so v's subtree is [v, v + ND(v) - 1].
using Pos = std::int32_t;
inline constexpr Pos kNoPos = -1;

class DfsTree {
 public:
  DfsTree() = default;

  // Iterative DFS of g minus `exclude` from `root`, neighbors visited in
  // ascending id order. Vertices unreachable from root get kNoPos.
  static DfsTree build(const Graph& g, std::span<const Vertex> exclude, Vertex root);

  Pos size() const noexcept { return static_cast<Pos>(vertex_.size()); }
  Pos root() const noexcept { return 0; }

  Pos parent(Pos v) const { return parent_[v]; }
  std::int32_t depth(Pos v) const { return depth_[v]; }
  std::int32_t subtree_size(Pos v) const { return size_[v]; }
  Pos subtree_last(Pos v) const { return v + size_[v] - 1; }
  bool is_ancestor(Pos a, Pos v) const { return a <= v && v <= a + size_[a] - 1; }

  Vertex vertex(Pos v) const { return vertex_[v]; }
  Pos position(Vertex x) const {
    return x >= 0 && x < static_cast<Vertex>(position_.size()) ? position_[x] : kNoPos;
  }
  Vertex graph_vertices() const noexcept { return static_cast<Vertex>(position_.size()); }

  // Children in ascending preorder; stored contiguously in child_begin order.
  std::span<const Pos> children(Pos v) const {
    return {children_.data() + child_begin_[v], children_.data() + child_begin_[v + 1]};
  }
  std::int32_t child_begin(Pos v) const { return child_begin_[v]; }
  std::int32_t num_children(Pos v) const { return child_begin_[v + 1] - child_begin_[v]; }

  std::size_t space_words() const;

  friend bool operator==(const DfsTree&, const DfsTree&) = default;

 private:
  friend struct Serializer;

  std::vector<Pos> parent_;
  std::vector<std::int32_t> depth_;
  std::vector<std::int32_t> size_;
  std::vector<Vertex> vertex_;
  std::vector<Pos> position_;
  std::vector<std::int32_t> child_begin_;
  std::vector<Pos> children_;
};

// Non-tree edges of g restricted to the tree's vertices, as (descendant,
// ancestor) position pairs. Edges incident to `ignore` are skipped.
struct BackEdge {
  Pos lower;  // descendant end
  Pos upper;  // ancestor end
};
std::vector<BackEdge> back_edges(const DfsTree& t, const Graph& g, Vertex ignore = kNoVertex);

}  // namespace pvf
