#pragma once

#include <cstdint>
#include <tuple>

#include "skipweb/errors.hpp"

namespace skipweb {

// Planar geometry for trapezoidal maps.  Segment endpoints are integers with
// |coordinate| <= kCoordLimit so that every predicate below evaluates exactly
// in 128-bit arithmetic; no floating point is used anywhere.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 20;

using i128 = __int128;

struct PointXY {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const PointXY& o) const { return x == o.x && y == o.y; }
};

struct Segment {
  std::int64_t x1 = 0, y1 = 0, x2 = 0, y2 = 0;  // kept with x1 < x2

  void normalize() {
    if (x2 < x1) {
      std::swap(x1, x2);
      std::swap(y1, y2);
    }
  }
  bool operator==(const Segment& o) const {
    return x1 == o.x1 && y1 == o.y1 && x2 == o.x2 && y2 == o.y2;
  }
  bool operator<(const Segment& o) const {
    return std::tie(x1, y1, x2, y2) < std::tie(o.x1, o.y1, o.x2, o.y2);
  }
};

inline int sign_i128(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Orientation of c relative to the directed line a->b: +1 left/above, -1 right/below.
inline int orient(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by,
                  std::int64_t cx, std::int64_t cy) {
  i128 v = i128(bx - ax) * i128(cy - ay) - i128(by - ay) * i128(cx - ax);
  return sign_i128(v);
}

// Sign of (y(s at x=p/q) - yv) for a segment s and rational abscissa p/q, q>0.
// Caller guarantees x1*q <= p <= x2*q.
inline int side_of_segment_at(const Segment& s, i128 p, i128 q, i128 yv_num, i128 yv_den) {
  // y(s) = (y1*(x2*q - p) + y2*(p - x1*q)) / (q*(x2-x1))
  i128 num = i128(s.y1) * (i128(s.x2) * q - p) + i128(s.y2) * (p - i128(s.x1) * q);
  i128 den = q * i128(s.x2 - s.x1);  // > 0
  // compare num/den with yv_num/yv_den (yv_den > 0)
  return sign_i128(num * yv_den - yv_num * den);
}

// y-comparison of two non-crossing segments at rational abscissa p/q (q>0) that
// both span it: +1 if a above b, -1 below, 0 equal (touching).
inline int compare_segments_at(const Segment& a, const Segment& b, i128 p, i128 q) {
  // ya - yb sign via cross-multiplied linear interpolation.
  i128 na = i128(a.y1) * (i128(a.x2) * q - p) + i128(a.y2) * (p - i128(a.x1) * q);
  i128 da = q * i128(a.x2 - a.x1);
  i128 nb = i128(b.y1) * (i128(b.x2) * q - p) + i128(b.y2) * (p - i128(b.x1) * q);
  i128 db = q * i128(b.x2 - b.x1);
  return sign_i128(na * db - nb * da);
}

// True if the closed segments share any point.  Inputs are expected to be in
// general position (distinct endpoint x-coordinates), so touching is already a
// degeneracy worth reporting.
inline bool segments_intersect(const Segment& a, const Segment& b) {
  int o1 = orient(a.x1, a.y1, a.x2, a.y2, b.x1, b.y1);
  int o2 = orient(a.x1, a.y1, a.x2, a.y2, b.x2, b.y2);
  int o3 = orient(b.x1, b.y1, b.x2, b.y2, a.x1, a.y1);
  int o4 = orient(b.x1, b.y1, b.x2, b.y2, a.x2, a.y2);
  if (o1 != o2 && o3 != o4) return true;
  auto on = [](const Segment& s, std::int64_t px, std::int64_t py) {
    if (orient(s.x1, s.y1, s.x2, s.y2, px, py) != 0) return false;
    return px >= s.x1 && px <= s.x2 &&
           py >= std::min(s.y1, s.y2) && py <= std::max(s.y1, s.y2);
  };
  return on(a, b.x1, b.y1) || on(a, b.x2, b.y2) || on(b, a.x1, a.y1) || on(b, a.x2, a.y2);
}

inline bool point_on_segment(const Segment& s, std::int64_t px, std::int64_t py) {
  if (px < s.x1 || px > s.x2) return false;
  return orient(s.x1, s.y1, s.x2, s.y2, px, py) == 0;
}

struct BBox {
  std::int64_t xmin = -kCoordLimit, ymin = -kCoordLimit;
  std::int64_t xmax = kCoordLimit, ymax = kCoordLimit;
  bool contains(std::int64_t x, std::int64_t y) const {
    return x > xmin && x < xmax && y > ymin && y < ymax;
  }
  bool operator==(const BBox& o) const {
    return xmin == o.xmin && ymin == o.ymin && xmax == o.xmax && ymax == o.ymax;
  }
};

}  // namespace skipweb
