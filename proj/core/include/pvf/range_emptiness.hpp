#pragma once

#include <cstdint>
#include <vector>

namespace pvf {

struct Point2 {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// Static orthogonal range emptiness over integer points.
//
// Points are sorted by x; level k of the hierarchy holds the y values of
// every aligned block of 2^k consecutive points, sorted. A rectangle query
// maps the x-range to an index range, splits it into O(log m) blocks and
// binary-searches each for a y inside [ylo, yhi]. O(log^2 m) per query,
// O(m log m) words.
class RangeEmptiness2D {
 public:
  RangeEmptiness2D() = default;
  explicit RangeEmptiness2D(std::vector<Point2> points);

  // True iff some point lies in [xlo, xhi] x [ylo, yhi]. Empty ranges give false.
  bool any(std::int32_t xlo, std::int32_t xhi, std::int32_t ylo, std::int32_t yhi) const;

  std::size_t size() const noexcept { return xs_.size(); }
  std::size_t space_words() const;

  friend bool operator==(const RangeEmptiness2D&, const RangeEmptiness2D&) = default;

 private:
  friend struct Serializer;

  bool block_hits(std::size_t level, std::size_t block, std::int32_t ylo, std::int32_t yhi) const;

  std::vector<std::int32_t> xs_;
  std::vector<std::vector<std::int32_t>> levels_;
};

}  // namespace pvf
