#include "pvf/range_emptiness.hpp"

#include <algorithm>

namespace pvf {

RangeEmptiness2D::RangeEmptiness2D(std::vector<Point2> points) {
  std::sort(points.begin(), points.end(),
            [](const Point2& a, const Point2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  const std::size_t m = points.size();
  xs_.resize(m);
  std::vector<std::int32_t> ys(m);
  for (std::size_t i = 0; i < m; ++i) {
    xs_[i] = points[i].x;
    ys[i] = points[i].y;
  }
  if (m == 0) return;
  levels_.push_back(std::move(ys));
  for (std::size_t width = 1; width < m; width *= 2) {
    const std::vector<std::int32_t>& prev = levels_.back();
    std::vector<std::int32_t> next(m);
    for (std::size_t lo = 0; lo < m; lo += 2 * width) {
      std::size_t mid = std::min(lo + width, m);
      std::size_t hi = std::min(lo + 2 * width, m);
      std::merge(prev.begin() + lo, prev.begin() + mid, prev.begin() + mid, prev.begin() + hi,
                 next.begin() + lo);
    }
    levels_.push_back(std::move(next));
  }
}

bool RangeEmptiness2D::block_hits(std::size_t level, std::size_t block, std::int32_t ylo,
                                  std::int32_t yhi) const {
  const std::vector<std::int32_t>& ys = levels_[level];
  std::size_t lo = block << level;
  std::size_t hi = std::min(lo + (std::size_t{1} << level), ys.size());
  if (lo >= hi) return false;
  auto it = std::lower_bound(ys.begin() + lo, ys.begin() + hi, ylo);
  return it != ys.begin() + hi && *it <= yhi;
}

bool RangeEmptiness2D::any(std::int32_t xlo, std::int32_t xhi, std::int32_t ylo, std::int32_t yhi) const {
  if (xlo > xhi || ylo > yhi || xs_.empty()) return false;
  std::size_t lo = std::lower_bound(xs_.begin(), xs_.end(), xlo) - xs_.begin();
  std::size_t hi = std::upper_bound(xs_.begin(), xs_.end(), xhi) - xs_.begin();
  for (std::size_t level = 0; lo < hi; ++level, lo >>= 1, hi >>= 1) {
    if (lo & 1) {
      if (block_hits(level, lo, ylo, yhi)) return true;
      ++lo;
    }
    if (hi & 1) {
      --hi;
      if (block_hits(level, hi, ylo, yhi)) return true;
    }
  }
  return false;
}

std::size_t RangeEmptiness2D::space_words() const {
  std::size_t words = xs_.size();
  for (const auto& level : levels_) words += level.size();
  return words;
}

}  // namespace pvf
