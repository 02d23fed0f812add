#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>

namespace absfact {

// Integer lattice vector / exponent pair.
using Vec2 = std::array<std::int64_t, 2>;

inline std::int64_t dot(Vec2 a, Vec2 b) { return a[0] * b[0] + a[1] * b[1]; }

// Signed 2x2 determinant det(a, b) = a.x * b.y - a.y * b.x.
inline std::int64_t det(Vec2 a, Vec2 b) { return a[0] * b[1] - a[1] * b[0]; }

inline Vec2 add(Vec2 a, Vec2 b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 sub(Vec2 a, Vec2 b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 neg(Vec2 a) { return {-a[0], -a[1]}; }
inline Vec2 scale(std::int64_t c, Vec2 a) { return {c * a[0], c * a[1]}; }

inline std::int64_t gcd2(Vec2 a) {
  return std::gcd(std::abs(a[0]), std::abs(a[1]));
}

// a / gcd(a); the zero vector is returned unchanged.
inline Vec2 primitive(Vec2 a) {
  std::int64_t g = gcd2(a);
  if (g == 0) return a;
  return {a[0] / g, a[1] / g};
}

// Counterclockwise rotation by 90 degrees.
inline Vec2 rot90(Vec2 a) { return {-a[1], a[0]}; }

// Strict counterclockwise angular order on nonzero vectors, starting just
// above direction (1,0) and wrapping around; (1,0) itself sorts last (angle
// 2*pi). Used to order fan rays from (0,1) through the negative directions
// down to (1,0).
inline bool ccw_ray_less(Vec2 a, Vec2 b) {
  auto wedge_index = [](Vec2 v) {
    // 0: (1,0) treated as angle 2*pi, 1: upper half plane including (0,1),
    // 2: (-1,0), 3: lower half plane including (0,-1).
    if (v[1] == 0) return v[0] > 0 ? 4 : 2;
    return v[1] > 0 ? 1 : 3;
  };
  int wa = wedge_index(a), wb = wedge_index(b);
  if (wa != wb) return wa < wb;
  return det(a, b) > 0;
}

}  // namespace absfact
