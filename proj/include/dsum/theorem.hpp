#pragma once

/// Ehrhart coefficients of an axis simplex from the coth-product formula:
/// c_m is the coefficient of s^{-(m+1)} at s = 0 of
///
///   pi^{m+1} / (m! 2^{n-m} p) * sum_{r=1}^{p} prod_{c in {a_1..a_n, p}} (1 + coth(pi (s + i r) / c)).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsum/coth_series.hpp"
#include "dsum/complex.hpp"
#include "dsum/errors.hpp"
#include "dsum/simplex.hpp"

namespace dsum {

/// Default truncation order n + 3 of every factor series: the product has a
/// pole of order at most n + 1, so s^{-(m+1)} stays inside the window with
/// two orders to spare.
inline int default_truncation_order(const AxisSimplex& s) { return static_cast<int>(s.dimension()) + 3; }

/// Product of the n + 1 factor series at a given r.
inline LaurentSeries theorem_summand(const AxisSimplex& s, std::int64_t r, int truncation_order) {
  LaurentSeries product = factor_series(s.product(), r, truncation_order);
  for (std::int64_t a : s.intercepts()) product *= factor_series(a, r, truncation_order);
  return product;
}

/// pi^{m+1} / (m! 2^{n-m} p).
inline Real theorem_prefactor(const AxisSimplex& s, std::size_t m) {
  const std::size_t n = s.dimension();
  Real value = std::pow(kPi, static_cast<Real>(m + 1));
  for (std::size_t k = 2; k <= m; ++k) value /= static_cast<Real>(k);
  value /= std::ldexp(Real(1), static_cast<int>(n - m));
  return value / static_cast<Real>(s.product());
}

/// All c_0..c_n from one pass over r. Summation is in ascending r with
/// compensation, so results are reproducible bit-for-bit.
inline std::vector<ComplexValue> theorem_coefficients(const AxisSimplex& s,
                                                      std::optional<int> truncation_order = std::nullopt) {
  const std::size_t n = s.dimension();
  const int order = truncation_order.value_or(default_truncation_order(s));
  std::vector<CompensatedSum<ComplexValue>> sums(n + 1);
  for (std::int64_t r = 1; r <= s.product(); ++r) {
    LaurentSeries term = theorem_summand(s, r, order);
    for (std::size_t m = 0; m <= n; ++m) {
      const int k = -static_cast<int>(m) - 1;
      if (!term.contains(k)) {
        throw truncation_error("truncation order " + std::to_string(order) + " cannot resolve s^" +
                               std::to_string(k));
      }
      sums[m].add(term.coefficient(k));
    }
  }
  std::vector<ComplexValue> out(n + 1);
  for (std::size_t m = 0; m <= n; ++m) out[m] = theorem_prefactor(s, m) * sums[m].value();
  return out;
}

/// c_m alone. The imaginary part of the result is a rounding residual.
inline ComplexValue theorem_coefficient(const AxisSimplex& s, std::size_t m,
                                        std::optional<int> truncation_order = std::nullopt) {
  if (m > s.dimension()) {
    throw input_error("coefficient index " + std::to_string(m) + " exceeds dimension " +
                      std::to_string(s.dimension()));
  }
  const int order = truncation_order.value_or(default_truncation_order(s));
  const int k = -static_cast<int>(m) - 1;
  CompensatedSum<ComplexValue> sum;
  for (std::int64_t r = 1; r <= s.product(); ++r) {
    LaurentSeries term = theorem_summand(s, r, order);
    if (!term.contains(k)) {
      throw truncation_error("truncation order " + std::to_string(order) + " cannot resolve s^" +
                             std::to_string(k));
    }
    sum.add(term.coefficient(k));
  }
  return theorem_prefactor(s, m) * sum.value();
}

}  // namespace dsum
