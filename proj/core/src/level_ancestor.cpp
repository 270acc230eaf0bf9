#include "pvf/level_ancestor.hpp"

#include <string>

#include "pvf/errors.hpp"

namespace pvf {

LevelAncestorIndex::LevelAncestorIndex(const DfsTree& t) : n_(static_cast<std::size_t>(t.size())) {
  std::int32_t max_depth = 0;
  depth_.resize(n_);
  for (Pos v = 0; v < t.size(); ++v) {
    depth_[v] = t.depth(v);
    if (depth_[v] > max_depth) max_depth = depth_[v];
  }
  levels_ = 1;
  while ((std::int64_t{1} << levels_) <= max_depth) ++levels_;
  up_.assign(static_cast<std::size_t>(levels_) * n_, kNoPos);
  for (Pos v = 0; v < t.size(); ++v) up_[v] = t.parent(v);
  for (int k = 1; k < levels_; ++k) {
    const Pos* prev = up_.data() + (k - 1) * n_;
    Pos* cur = up_.data() + k * n_;
    for (std::size_t v = 0; v < n_; ++v) cur[v] = prev[v] == kNoPos ? kNoPos : prev[prev[v]];
  }
}

Pos LevelAncestorIndex::ancestor_at_depth(Pos v, std::int32_t depth) const {
  if (v < 0 || static_cast<std::size_t>(v) >= n_) {
    throw InvalidRequest("level ancestor of unknown position " + std::to_string(v));
  }
  if (depth < 0 || depth > depth_[v]) {
    throw InvalidRequest("requested depth " + std::to_string(depth) + " outside [0, " +
                         std::to_string(depth_[v]) + "]");
  }
  std::int32_t climb = depth_[v] - depth;
  for (int k = 0; climb != 0; ++k, climb >>= 1) {
    if (climb & 1) v = up_[static_cast<std::size_t>(k) * n_ + v];
  }
  return v;
}

}  // namespace pvf
