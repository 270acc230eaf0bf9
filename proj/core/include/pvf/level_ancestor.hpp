#pragma once

#include <cstdint>
#include <vector>

#include "pvf/dfs_tree.hpp"

namespace pvf {

// Binary lifting: jump(v, k) is the 2^k-th ancestor of v.
class LevelAncestorIndex {
 public:
  LevelAncestorIndex() = default;
  explicit LevelAncestorIndex(const DfsTree& t);

  // Ancestor of v at the given depth. Throws InvalidRequest unless
  // 0 <= depth <= depth(v).
  Pos ancestor_at_depth(Pos v, std::int32_t depth) const;

  Pos jump(Pos v, int k) const { return up_[static_cast<std::size_t>(k) * n_ + v]; }
  int levels() const noexcept { return levels_; }

  std::size_t space_words() const { return up_.size() + depth_.size(); }

  friend bool operator==(const LevelAncestorIndex&, const LevelAncestorIndex&) = default;

 private:
  friend struct Serializer;

  std::size_t n_ = 0;
  int levels_ = 0;
  std::vector<Pos> up_;
  std::vector<std::int32_t> depth_;
};

}  // namespace pvf
