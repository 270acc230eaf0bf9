#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "pvf/dfs_tree.hpp"
#include "pvf/graph.hpp"
#include "pvf/level_ancestor.hpp"
#include "pvf/low_table.hpp"
#include "pvf/range_emptiness.hpp"
#include "pvf/reordering.hpp"

namespace pvf {

// A family of sorted integer lists in one flat buffer.
class ListFamily {
 public:
  ListFamily() = default;
  explicit ListFamily(const std::vector<std::vector<std::int32_t>>& lists);

  std::size_t size() const noexcept { return begin_.empty() ? 0 : begin_.size() - 1; }
  std::span<const std::int32_t> operator[](std::size_t i) const {
    return {data_.data() + begin_[i], data_.data() + begin_[i + 1]};
  }
  std::size_t space_words() const { return begin_.size() + data_.size(); }

  friend bool operator==(const ListFamily&, const ListFamily&) = default;

 private:
  friend struct Serializer;

  std::vector<std::int64_t> begin_;
  std::vector<std::int32_t> data_;
};

// True iff the ascending `list` has an element in [lo, hi]: one lower-bound
// search plus one comparison.
bool neighbor_interval_nonempty(std::span<const std::int32_t> list, std::int32_t lo, std::int32_t hi);

// Everything the preprocessing phase builds. Immutable once constructed.
//
// Predicted vertices are addressed by their index into predicted() ("pred
// index"); tree-side structures use base DFS positions unless noted.
class OracleState {
 public:
  OracleState() = default;

  const AugmentedGraph& augmented() const noexcept { return aug_; }
  const Graph& graph() const noexcept { return aug_.graph; }
  Vertex hub() const noexcept { return aug_.hub; }
  Vertex base_vertices() const noexcept { return aug_.hub; }
  std::int32_t d() const noexcept { return d_; }
  const std::vector<Vertex>& predicted() const noexcept { return predicted_; }
  std::int32_t num_predicted() const noexcept { return static_cast<std::int32_t>(predicted_.size()); }
  // Pred index of x, or -1 when x is not predicted.
  std::int32_t predicted_index(Vertex x) const {
    return x >= 0 && x < static_cast<Vertex>(pred_index_.size()) ? pred_index_[x] : -1;
  }

  const DfsTree& tree() const noexcept { return tree_; }
  const LevelAncestorIndex& level_ancestor() const noexcept { return la_; }
  const RangeEmptiness2D& base_ranges() const noexcept { return base_2d_; }
  const LowTable& lows() const noexcept { return lows_; }
  std::int32_t low_columns() const noexcept { return lows_.columns(); }

  // T_i for i = 1..low_columns().
  const Reordering& by_low(std::int32_t i) const { return by_low_[i - 1]; }
  const RangeEmptiness2D& by_low_ranges(std::int32_t i) const { return by_low_2d_[i - 1]; }

  // T_u for pred index u.
  const Reordering& by_marks(std::int32_t u) const { return by_marks_[u]; }
  const RangeEmptiness2D& by_marks_ranges(std::int32_t u) const { return by_marks_2d_[u]; }

  // Neighbors of predicted v inside the tree, as ascending base positions.
  std::span<const std::int32_t> neighbors(std::int32_t v) const { return neighbors_[v]; }
  // Neighbors of predicted v inside the tree, as ascending T_u numbers.
  std::span<const std::int32_t> neighbors_in(std::int32_t u, std::int32_t v) const {
    return neighbors_u_[static_cast<std::size_t>(u) * predicted_.size() + v];
  }
  // Pred indices of the predicted neighbors of predicted u, ascending.
  std::span<const std::int32_t> predicted_adjacency(std::int32_t u) const { return pred_adj_[u]; }

  std::size_t space_words() const noexcept { return space_words_; }

  void save(std::ostream& out) const;
  static OracleState load(std::istream& in);

  friend bool operator==(const OracleState&, const OracleState&) = default;

 private:
  friend OracleState preprocess(const Instance& inst);
  friend struct Serializer;

  std::size_t count_space() const;

  AugmentedGraph aug_;
  std::int32_t d_ = 0;
  std::vector<Vertex> predicted_;
  std::vector<std::int32_t> pred_index_;
  DfsTree tree_;
  LevelAncestorIndex la_;
  RangeEmptiness2D base_2d_;
  LowTable lows_;
  std::vector<Reordering> by_low_;
  std::vector<RangeEmptiness2D> by_low_2d_;
  std::vector<Reordering> by_marks_;
  std::vector<RangeEmptiness2D> by_marks_2d_;
  ListFamily neighbors_;
  ListFamily neighbors_u_;
  ListFamily pred_adj_;
  std::size_t space_words_ = 0;
};

// Builds the oracle for (G, d, predicted). The DFS tree spans G minus the
// prediction, rooted at the hub; low tables and T_i use d + 1 columns.
OracleState preprocess(const Instance& inst);

// Back-edges as 2D points under `order`, or under base positions when null.
std::vector<Point2> renumbered_back_edges(const std::vector<BackEdge>& edges, const Reordering* order);

}  // namespace pvf
