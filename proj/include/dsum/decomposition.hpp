#pragma once

/// The constant Ehrhart coefficient of the triangle with legs a, b, split by
/// which factors of
///
///   (pi / 4ab) sum_{r=1}^{ab} (1 + coth(pi(s+ir)/a)) (1 + coth(pi(s+ir)/b)) (1 + coth(pi(s+ir)/ab))
///
/// carry the pole at each r. Only three groups of r contribute to s^-1:
///   a | r, ab does not divide r:  1/4 - 1/(4b) - s(a, b)
///   b | r, ab does not divide r:  1/4 - 1/(4a) - s(b, a)
///   r = ab:                       (1/(ab) + a/b + b/a)/12 + (1/b + 1/a + 1)/4
/// and they add up to 1, which is the reciprocity law rearranged.

#include <cstdint>
#include <string>
#include <vector>

#include "dsum/coth_series.hpp"
#include "dsum/complex.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/errors.hpp"
#include "dsum/rational.hpp"

namespace dsum {

struct ConstantTermDecomposition {
  Rational contrib_a;
  Rational contrib_b;
  Rational contrib_triple;
  Rational total;
};

inline ConstantTermDecomposition decompose_constant_term(const CoprimePair& p) {
  const BigInt& a = p.a();
  const BigInt& b = p.b();
  const Rational quarter(1, 4);
  ConstantTermDecomposition d;
  d.contrib_a = quarter - Rational(BigInt(1), 4 * b) - dedekind_sawtooth(p);
  d.contrib_b = quarter - Rational(BigInt(1), 4 * a) - dedekind_sawtooth(p.swapped());
  d.contrib_triple = Rational(a * a + b * b + 1, 12 * a * b) + Rational(a + b + a * b, 4 * a * b);
  d.total = d.contrib_a + d.contrib_b + d.contrib_triple;
  return d;
}

enum class Contribution { a, b, triple };

namespace detail {

inline std::int64_t small_operand(const BigInt& v) {
  if (v > std::int64_t{1} << 31) throw resource_error("instance too large: " + v.str());
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// The r in 1..ab that feed one contribution:
///   a      -> {k a : 1 <= k <= b - 1}
///   b      -> {k b : 1 <= k <= a - 1}
///   triple -> {ab}
inline std::vector<std::int64_t> contribution_support(std::int64_t a, std::int64_t b, Contribution which) {
  std::vector<std::int64_t> out;
  switch (which) {
    case Contribution::a:
      for (std::int64_t k = 1; k < b; ++k) out.push_back(k * a);
      break;
    case Contribution::b:
      for (std::int64_t k = 1; k < a; ++k) out.push_back(k * b);
      break;
    case Contribution::triple:
      out.push_back(a * b);
      break;
  }
  return out;
}

/// Sets of r in 1..ab where the indicator products of the expansion are
/// nonzero, found by scanning r rather than by reasoning about divisibility.
struct IndicatorSupports {
  std::vector<std::int64_t> only_a;             // chi_a (1 - chi_b)(1 - chi_ab)
  std::vector<std::int64_t> only_b;             // (1 - chi_a) chi_b (1 - chi_ab)
  std::vector<std::int64_t> only_ab;            // (1 - chi_a)(1 - chi_b) chi_ab
  std::vector<std::int64_t> a_and_b_not_ab;     // chi_a chi_b (1 - chi_ab)
  std::vector<std::int64_t> a_and_ab_not_b;     // chi_a (1 - chi_b) chi_ab
  std::vector<std::int64_t> b_and_ab_not_a;     // (1 - chi_a) chi_b chi_ab
  std::vector<std::int64_t> all_three;          // chi_a chi_b chi_ab
};

inline IndicatorSupports indicator_supports(std::int64_t a, std::int64_t b) {
  IndicatorSupports s;
  const std::int64_t ab = a * b;
  for (std::int64_t r = 1; r <= ab; ++r) {
    const bool ca = r % a == 0, cb = r % b == 0, cab = r % ab == 0;
    if (ca && !cb && !cab) s.only_a.push_back(r);
    if (!ca && cb && !cab) s.only_b.push_back(r);
    if (!ca && !cb && cab) s.only_ab.push_back(r);
    if (ca && cb && !cab) s.a_and_b_not_ab.push_back(r);
    if (ca && !cb && cab) s.a_and_ab_not_b.push_back(r);
    if (!ca && cb && cab) s.b_and_ab_not_a.push_back(r);
    if (ca && cb && cab) s.all_three.push_back(r);
  }
  return s;
}

/// Re-derives one contribution numerically: sums the product of the three
/// factor series over its support and takes (pi / 4ab) times the s^-1
/// coefficient.
inline ComplexValue numeric_contribution_check(const CoprimePair& p, Contribution which,
                                               int truncation_order = 5) {
  const std::int64_t a = detail::small_operand(p.a());
  const std::int64_t b = detail::small_operand(p.b());
  const std::int64_t ab = a * b;
  CompensatedSum<ComplexValue> sum;
  for (std::int64_t r : contribution_support(a, b, which)) {
    LaurentSeries term = factor_series(a, r, truncation_order) * factor_series(b, r, truncation_order) *
                         factor_series(ab, r, truncation_order);
    sum.add(term.coefficient(-1));
  }
  return (kPi / (Real(4) * static_cast<Real>(ab))) * sum.value();
}

}  // namespace dsum
