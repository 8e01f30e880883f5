#pragma once

/// Laurent expansions in s of the factor 1 + coth(pi (s + i r) / c).
///
/// When c | r the factor has a simple pole at s = 0 and coincides with
/// 1 + coth(pi s / c) by periodicity. Otherwise it is analytic there and is
/// expanded around the regular value 1 + coth(pi i r / c) = 1 - i cot(pi r / c).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dsum/complex.hpp"
#include "dsum/errors.hpp"
#include "dsum/laurent_series.hpp"
#include "dsum/rational.hpp"

namespace dsum {

using LaurentSeries = TruncatedLaurentSeries<ComplexValue>;

/// B_0 .. B_count-1 (B_1 = -1/2), from sum_{j<=m} C(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_numbers(std::size_t count) {
  std::vector<Rational> b;
  b.reserve(count);
  for (std::size_t m = 0; m < count; ++m) {
    if (m == 0) {
      b.emplace_back(1);
      continue;
    }
    Rational acc;
    BigInt binom = 1;  // C(m+1, j)
    for (std::size_t j = 0; j < m; ++j) {
      acc += Rational(binom) * b[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b.push_back(-acc / Rational(BigInt(m + 1)));
  }
  return b;
}

/// Exact coefficients of x^{2j-1} in coth(x) = sum_j 2^{2j} B_{2j} x^{2j-1} / (2j)!,
/// for j = 0 .. count-1.
inline std::vector<Rational> coth_odd_coefficients(std::size_t count) {
  auto b = bernoulli_numbers(2 * count + 1);
  std::vector<Rational> out;
  out.reserve(count);
  BigInt factorial = 1;
  BigInt power = 1;
  for (std::size_t j = 0; j < count; ++j) {
    if (j > 0) {
      factorial *= (2 * j - 1) * (2 * j);
      power *= 4;
    }
    out.push_back(Rational(power) * b[2 * j] / Rational(factorial));
  }
  return out;
}

enum class FactorBranch { singular, regular };

/// Which expansion applies to 1 + coth(pi (s + i r) / c).
struct FactorKind {
  FactorBranch kind;
  std::int64_t c;
  std::int64_t r;

  static FactorKind classify(std::int64_t c, std::int64_t r) {
    if (c <= 0) throw input_error("modulus must be positive");
    return {r % c == 0 ? FactorBranch::singular : FactorBranch::regular, c, r};
  }
  bool singular() const noexcept { return kind == FactorBranch::singular; }
};

/// 1 + coth(pi s / c) on the window [-1, K]:
/// (c/pi) s^-1 + 1 + (pi/3c) s + 0 s^2 - (pi^3/45c^3) s^3 + ...
inline LaurentSeries coth_series_singular(std::int64_t c, int truncation_order) {
  if (c <= 0) throw input_error("modulus must be positive");
  if (truncation_order < -1) throw truncation_error("singular factor needs truncation order >= -1");
  const auto odd = coth_odd_coefficients(static_cast<std::size_t>(truncation_order + 3) / 2);
  const Real scale = kPi / static_cast<Real>(c);
  // coefficient of s^{2j-1} is odd[j] * scale^{2j-1}
  Real power = 1 / scale;
  std::vector<ComplexValue> coeffs(static_cast<std::size_t>(truncation_order + 2));
  for (std::size_t j = 0; j < odd.size(); ++j) {
    const int order = 2 * static_cast<int>(j) - 1;
    if (order > truncation_order) break;
    coeffs[static_cast<std::size_t>(order + 1)] = ComplexValue(odd[j].to_double() * power, 0);
    power *= scale * scale;
  }
  if (truncation_order >= 0) coeffs[1] += ComplexValue(1, 0);
  return LaurentSeries(-1, std::move(coeffs));
}

/// 1 + coth(pi (s + i r) / c) on [0, K] for c not dividing r.
///
/// Taylor coefficients y_k of coth(u0 + h), u0 = pi i r / c, follow from
/// y' = 1 - y^2: (k+1) y_{k+1} = [k = 0] - sum_{j=0}^{k} y_j y_{k-j}. With
/// h = pi s / c the s^k coefficient is y_k (pi/c)^k.
inline LaurentSeries coth_series_regular(std::int64_t c, std::int64_t r, int truncation_order) {
  const auto kind = FactorKind::classify(c, r);
  if (kind.singular()) {
    throw branch_error("c=" + std::to_string(c) + " divides r=" + std::to_string(r) +
                       ": use the singular expansion");
  }
  if (truncation_order < 0) throw truncation_error("regular factor needs truncation order >= 0");
  const auto len = static_cast<std::size_t>(truncation_order + 1);
  std::vector<ComplexValue> y(len);
  y[0] = ComplexValue(0, -cot_pi_fraction(r, c));
  for (std::size_t k = 0; k + 1 < len; ++k) {
    ComplexValue conv{};
    for (std::size_t j = 0; j <= k; ++j) conv += y[j] * y[k - j];
    ComplexValue rhs = (k == 0 ? ComplexValue(1, 0) : ComplexValue(0, 0)) - conv;
    y[k + 1] = rhs / static_cast<Real>(k + 1);
  }
  const Real scale = kPi / static_cast<Real>(c);
  Real power = 1;
  for (std::size_t k = 0; k < len; ++k) {
    y[k] *= power;
    power *= scale;
  }
  y[0] += ComplexValue(1, 0);
  return LaurentSeries(0, std::move(y));
}

/// Dispatches on c | r. Both branches are truncated at the same order K.
inline LaurentSeries factor_series(std::int64_t c, std::int64_t r, int truncation_order) {
  if (r < 1) throw input_error("r must be at least 1");
  return FactorKind::classify(c, r).singular() ? coth_series_singular(c, truncation_order)
                                               : coth_series_regular(c, r, truncation_order);
}

/// Direct evaluation of 1 + coth(pi (s + i r) / c) at a complex point.
inline ComplexValue factor_value(std::int64_t c, std::int64_t r, ComplexValue s) {
  ComplexValue z = (kPi / static_cast<Real>(c)) * (s + ComplexValue(0, static_cast<Real>(r)));
  return ComplexValue(1, 0) + ComplexValue(1, 0) / std::tanh(z);
}

}  // namespace dsum
