#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pvf/dfs_tree.hpp"
#include "pvf/graph.hpp"

namespace pvf {

// low(v, i) for i = 1..k: the i-th lowest (closest to the root) distinct
// proper ancestor of v that receives a back-edge from T(v); kNoPos past the
// end. Entries for one v have strictly increasing depth.
class LowTable {
 public:
  LowTable() = default;

  // Bottom-up merge of children's truncated lists with v's own back-edge
  // targets. Edges incident to `ignore` do not count as back-edges.
  static LowTable build(const DfsTree& t, const Graph& g, std::int32_t k, Vertex ignore = kNoVertex);

  std::int32_t columns() const noexcept { return k_; }
  Pos low(Pos v, std::int32_t i) const { return table_[static_cast<std::size_t>(v) * k_ + (i - 1)]; }
  std::span<const Pos> row(Pos v) const {
    return {table_.data() + static_cast<std::size_t>(v) * k_, static_cast<std::size_t>(k_)};
  }

  std::size_t space_words() const { return table_.size(); }

  friend bool operator==(const LowTable&, const LowTable&) = default;

 private:
  friend struct Serializer;

  std::int32_t k_ = 0;
  std::vector<Pos> table_;
};

}  // namespace pvf
