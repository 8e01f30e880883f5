#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "dsum/errors.hpp"
#include "dsum/rational.hpp"
#include "dsum/simplex.hpp"

namespace dsum {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Twice the signed area of triangle (o, a, b); positive for a left turn.
inline std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Strictly convex lattice polygon, vertices counterclockwise.
class LatticePolygon {
 public:
  explicit LatticePolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3) throw input_error("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
      const auto& prev = vertices_[(i + n - 1) % n];
      const auto& cur = vertices_[i];
      const auto& next = vertices_[(i + 1) % n];
      std::int64_t turn = cross(prev, cur, next);
      if (turn == 0) {
        throw input_error("degenerate polygon: collinear vertices at index " + std::to_string(i));
      }
      if (turn < 0) {
        throw input_error("polygon is not strictly convex and counterclockwise at index " +
                          std::to_string(i));
      }
    }
    // Left turns everywhere still admit star shapes that wind more than once.
    for (std::size_t i = 0; i < n; ++i) {
      const auto& u = vertices_[i];
      const auto& v = vertices_[(i + 1) % n];
      for (const auto& w : vertices_) {
        if (cross(u, v, w) < 0) throw input_error("polygon is self-intersecting");
      }
    }
  }

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }

  /// Twice the area, an integer for lattice polygons.
  std::int64_t twice_area() const {
    std::int64_t sum = 0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& u = vertices_[i];
      const auto& v = vertices_[(i + 1) % n];
      sum += u.x * v.y - v.x * u.y;
    }
    return sum;
  }

  Rational area() const { return Rational(BigInt(twice_area()), BigInt(2)); }

  /// Number of lattice points on the boundary: sum over edges of gcd(|dx|, |dy|).
  std::int64_t boundary_points() const {
    std::int64_t total = 0;
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& u = vertices_[i];
      const auto& v = vertices_[(i + 1) % n];
      total += gcd(std::abs(v.x - u.x), std::abs(v.y - u.y));
    }
    return total;
  }

  /// Boundary-inclusive containment test for the polygon dilated by t.
  bool contains_dilated(const LatticePoint& q, std::int64_t t) const {
    const std::size_t n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) {
      LatticePoint u{vertices_[i].x * t, vertices_[i].y * t};
      const auto& w = vertices_[(i + 1) % n];
      LatticePoint v{w.x * t, w.y * t};
      if (cross(u, v, q) < 0) return false;
    }
    return true;
  }

 private:
  std::vector<LatticePoint> vertices_;
};

/// Pick's form A t^2 + (B/2) t + 1.
inline EhrhartPolynomial pick_polynomial(const LatticePolygon& poly) {
  return EhrhartPolynomial{
      RationalPolynomial({Rational(1), Rational(BigInt(poly.boundary_points()), BigInt(2)), poly.area()}),
      2};
}

/// Brute-force count of lattice points in t * poly: scan the bounding box of
/// the dilate and test each point. t = 0 gives the single dilated point.
inline std::uint64_t count_polygon_points(const LatticePolygon& poly, std::int64_t t,
                                          double limit = kDefaultEnumerationLimit) {
  if (t < 0) throw input_error("dilation factor must be nonnegative");
  if (t == 0) return 1;
  const auto& vs = poly.vertices();
  auto [min_x, max_x] = std::minmax_element(vs.begin(), vs.end(),
                                            [](const auto& p, const auto& q) { return p.x < q.x; });
  auto [min_y, max_y] = std::minmax_element(vs.begin(), vs.end(),
                                            [](const auto& p, const auto& q) { return p.y < q.y; });
  const std::int64_t x0 = min_x->x * t, x1 = max_x->x * t;
  const std::int64_t y0 = min_y->y * t, y1 = max_y->y * t;
  double box = static_cast<double>(x1 - x0 + 1) * static_cast<double>(y1 - y0 + 1);
  if (box > limit) {
    throw resource_error("instance too large: bounding box of " + std::to_string(box) +
                         " points exceeds the limit " + std::to_string(limit));
  }
  std::uint64_t count = 0;
  for (std::int64_t y = y0; y <= y1; ++y) {
    for (std::int64_t x = x0; x <= x1; ++x) {
      if (poly.contains_dilated({x, y}, t)) ++count;
    }
  }
  return count;
}

}  // namespace dsum
