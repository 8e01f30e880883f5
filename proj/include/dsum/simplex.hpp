#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "dsum/errors.hpp"
#include "dsum/polynomial.hpp"
#include "dsum/rational.hpp"

namespace dsum {

/// Default ceiling on the estimated number of points an enumeration visits.
inline constexpr double kDefaultEnumerationLimit = 1e8;

/// Simplex with vertices at the origin and a_i e_i, intercepts pairwise
/// coprime.
class AxisSimplex {
 public:
  explicit AxisSimplex(std::vector<std::int64_t> intercepts) : intercepts_(std::move(intercepts)) {
    if (intercepts_.empty()) throw input_error("simplex needs at least one intercept");
    product_ = 1;
    for (std::size_t i = 0; i < intercepts_.size(); ++i) {
      std::int64_t a = intercepts_[i];
      if (a <= 0) throw input_error("intercepts must be positive, got " + std::to_string(a));
      for (std::size_t j = 0; j < i; ++j) {
        std::int64_t g = gcd(a, intercepts_[j]);
        if (g != 1) {
          throw input_error("intercepts not pairwise coprime: gcd(" + std::to_string(intercepts_[j]) +
                            "," + std::to_string(a) + ")=" + std::to_string(g));
        }
      }
      if (__builtin_mul_overflow(product_, a, &product_)) {
        throw resource_error("instance too large: intercept product overflows");
      }
    }
  }

  const std::vector<std::int64_t>& intercepts() const noexcept { return intercepts_; }
  std::size_t dimension() const noexcept { return intercepts_.size(); }
  /// p, the product of the intercepts.
  std::int64_t product() const noexcept { return product_; }

  /// Exact volume p / n!.
  Rational volume() const {
    BigInt factorial = 1;
    for (std::size_t k = 2; k <= dimension(); ++k) factorial *= k;
    return Rational(BigInt(product_), factorial);
  }

 private:
  std::vector<std::int64_t> intercepts_;
  std::int64_t product_ = 1;
};

/// Ehrhart polynomial of an n-dimensional lattice polytope.
struct EhrhartPolynomial {
  RationalPolynomial poly;
  std::size_t dimension = 0;

  Rational coefficient(std::size_t j) const { return poly.coefficient(j); }
  Rational operator()(std::int64_t t) const { return poly_eval(poly, t); }
};

/// Number of integer points x >= 0 with sum x_i / a_i <= t.
///
/// Runs in integers only, as sum (p / a_i) x_i <= p t. The last coordinate
/// is counted in closed form, the others enumerated. Refuses when the
/// estimate t^n p / n! exceeds `limit`.
inline std::uint64_t count_lattice_points(const AxisSimplex& s, std::int64_t t,
                                          double limit = kDefaultEnumerationLimit) {
  if (t < 0) throw input_error("dilation factor must be nonnegative");
  const std::size_t n = s.dimension();
  long double estimate = static_cast<long double>(s.product());
  for (std::size_t k = 1; k <= n; ++k) {
    estimate *= static_cast<long double>(t);
    estimate /= static_cast<long double>(k);
  }
  if (estimate > limit) {
    throw resource_error("instance too large: about " + std::to_string(static_cast<double>(estimate)) +
                         " lattice points exceeds the limit " + std::to_string(limit));
  }

  std::int64_t budget = 0;
  if (__builtin_mul_overflow(s.product(), t, &budget)) {
    throw resource_error("instance too large: p*t overflows");
  }
  std::vector<std::int64_t> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[i] = s.product() / s.intercepts()[i];

  // Depth-first over coordinates 0..n-2; coordinate n-1 closes with a floor.
  auto count = [&](auto&& self, std::size_t axis, std::int64_t remaining) -> std::uint64_t {
    if (axis + 1 == n) return static_cast<std::uint64_t>(remaining / weights[axis]) + 1;
    std::uint64_t total = 0;
    for (std::int64_t used = 0; used <= remaining; used += weights[axis]) {
      total += self(self, axis + 1, remaining - used);
    }
    return total;
  };
  return count(count, 0, budget);
}

/// Interpolates counts at t = 0..n and checks c_0 = 1 and c_n = p / n!.
inline EhrhartPolynomial ehrhart_interpolate(const AxisSimplex& s,
                                             double limit = kDefaultEnumerationLimit) {
  const std::size_t n = s.dimension();
  std::vector<InterpolationPoint> points;
  points.reserve(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    auto ti = static_cast<std::int64_t>(t);
    points.push_back({ti, Rational(BigInt(count_lattice_points(s, ti, limit)))});
  }
  EhrhartPolynomial result{interpolate(points), n};
  if (result.coefficient(0) != Rational(1)) {
    throw internal_error("constant Ehrhart coefficient is " + result.coefficient(0).to_string() +
                         ", expected 1");
  }
  if (result.coefficient(n) != s.volume()) {
    throw internal_error("leading Ehrhart coefficient is " + result.coefficient(n).to_string() +
                         ", expected volume " + s.volume().to_string());
  }
  return result;
}

}  // namespace dsum
