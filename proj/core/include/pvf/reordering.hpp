#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pvf/dfs_tree.hpp"
#include "pvf/graph.hpp"
#include "pvf/low_table.hpp"

namespace pvf {

// An alternative DFS numbering of the same tree: the children of every
// vertex are visited in a different order, so the ancestor relation is
// unchanged and u is a descendant of v iff
// number(v) <= number(u) <= number(v) + ND(v) - 1.
class Reordering {
 public:
  Reordering() = default;

  // `child_order` holds, for every v, a permutation of t.children(v) laid
  // out at t.child_begin(v).
  Reordering(const DfsTree& t, std::vector<Pos> child_order);

  Pos number(Pos v) const { return number_[v]; }
  Pos position_of(Pos number) const { return inverse_[number]; }
  std::span<const Pos> children(Pos v) const {
    return {children_.data() + begin_[v], children_.data() + begin_[v + 1]};
  }
  // Index of c within children(parent(c)).
  std::int32_t sibling_rank(Pos c) const { return rank_[c]; }

  std::size_t space_words() const {
    return number_.size() + inverse_.size() + begin_.size() + children_.size() + rank_.size();
  }

  friend bool operator==(const Reordering&, const Reordering&) = default;

 private:
  friend struct Serializer;

  std::vector<Pos> number_;
  std::vector<Pos> inverse_;
  std::vector<std::int32_t> begin_;
  std::vector<Pos> children_;
  std::vector<std::int32_t> rank_;
};

// Sort key used by reorder_by_low: the base position of low(c, i), with
// null mapped above every real position.
inline std::int64_t low_key(const LowTable& lows, Pos c, std::int32_t i) {
  Pos w = lows.low(c, i);
  return w == kNoPos ? std::int64_t{1} << 40 : w;
}

// Children in ascending low_i order, nulls last, ties by preorder. i is 1-based.
Reordering reorder_by_low(const DfsTree& t, const LowTable& lows, std::int32_t i);

// marked(v) iff T(v) contains a neighbor of u in g.
std::vector<std::uint8_t> compute_marks(const DfsTree& t, const Graph& g, Vertex u);

// Unmarked children first, marked children after, each block stable.
Reordering reorder_by_marks(const DfsTree& t, std::span<const std::uint8_t> marks);

}  // namespace pvf
