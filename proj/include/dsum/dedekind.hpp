#pragma once

/// Dedekind sums s(a, b) for coprime positive a, b.
///
/// Three independent evaluations are provided:
///   - dedekind_sawtooth:  exact, O(b), sum of ((k/b)) ((ka/b)) over k
///   - dedekind_cotangent: floating point, O(b), (1/4b) sum cot(pi k a/b) cot(pi k/b)
///   - dedekind_fast:      exact, O(log b) steps, alternating a mod b reduction
///                         with the reciprocity law s(a,b) + s(b,a) = rhs(a,b)

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "dsum/complex.hpp"
#include "dsum/errors.hpp"
#include "dsum/rational.hpp"

namespace dsum {

/// A pair of relatively prime positive integers.
class CoprimePair {
 public:
  CoprimePair(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ <= 0 || b_ <= 0) {
      throw input_error("expected positive integers, got (" + a_.str() + "," + b_.str() + ")");
    }
    BigInt g = gcd(a_, b_);
    if (g != 1) {
      throw input_error("gcd(" + a_.str() + "," + b_.str() + ")=" + g.str() + ", expected coprime");
    }
  }
  CoprimePair(std::int64_t a, std::int64_t b) : CoprimePair(BigInt(a), BigInt(b)) {}

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  CoprimePair swapped() const { return CoprimePair(b_, a_, Unchecked{}); }

  friend bool operator==(const CoprimePair&, const CoprimePair&) = default;

 private:
  struct Unchecked {};
  CoprimePair(BigInt a, BigInt b, Unchecked) : a_(std::move(a)), b_(std::move(b)) {}

  BigInt a_;
  BigInt b_;
};

/// ((x)) = x - floor(x) - 1/2 for non-integer x, 0 for integer x.
inline Rational sawtooth(const Rational& x) {
  if (x.is_integer()) return Rational(0);
  return x - Rational(x.floor()) - Rational(1, 2);
}

/// Right side of the reciprocity law, -1/4 + (a/b + 1/(ab) + b/a)/12.
inline Rational reciprocity_rhs(const BigInt& a, const BigInt& b) {
  return Rational(-1, 4) + Rational(a * a + b * b + 1, 12 * a * b);
}

namespace detail {

// Fixed-width accumulation is exact while b^3 stays below 2^62.
inline constexpr std::uint64_t kSawtoothFixedWidthLimit = std::uint64_t{1} << 20;

// Sum over k = 1..(b-1)/2 of (2k - b)(2 r_k - b), r_k = ka mod b. The summand
// is invariant under k -> b - k, so the full sum is twice this. Acc must
// represent b^3 exactly.
template <class Acc, class Index>
Acc half_sawtooth_numerator(Index a_mod_b, Index b) {
  Acc acc = 0;
  Index residue = 0;
  const Index half = (b - 1) / 2;
  for (Index k = 1; k <= half; ++k) {
    residue += a_mod_b;
    if (residue >= b) residue -= b;
    acc += Acc(2 * k - b) * Acc(2 * residue - b);
  }
  return acc;
}

}  // namespace detail

/// Exact s(a, b) as the classical sawtooth sum, O(b).
///
/// For 0 < k < b and gcd(a, b) = 1 neither k/b nor ka/b is an integer, so
/// ((k/b)) ((ka/b)) = (2k - b)(2 (ka mod b) - b) / (4 b^2) and the whole sum
/// has a single integer numerator.
inline Rational dedekind_sawtooth(const CoprimePair& p) {
  const BigInt& b = p.b();
  if (b == 1) return Rational(0);
  BigInt a_mod_b = p.a() % b;
  BigInt numerator;
  if (b < detail::kSawtoothFixedWidthLimit) {
    auto bb = static_cast<std::int64_t>(b);
    auto aa = static_cast<std::int64_t>(a_mod_b);
    numerator = 2 * detail::half_sawtooth_numerator<std::int64_t>(aa, bb);
  } else {
    numerator = 2 * detail::half_sawtooth_numerator<BigInt>(a_mod_b, b);
  }
  return Rational(std::move(numerator), 4 * b * b);
}

/// Sum of sawtooth(k/b) * sawtooth(k a/b) term by term with no reduction of
/// a modulo b. Slow; used to check periodicity in a.
inline Rational dedekind_sawtooth_literal(const BigInt& a, const BigInt& b) {
  Rational sum;
  for (BigInt k = 1; k < b; ++k) {
    sum += sawtooth(Rational(k, b)) * sawtooth(Rational(k * a, b));
  }
  return sum;
}

/// Table of cot(pi j / b), j = 0..b-1, for evaluating s(a, b) at many a.
class CotangentTable {
 public:
  explicit CotangentTable(std::int64_t b) : b_(b), cot_(static_cast<std::size_t>(b), Real(0)) {
    if (b <= 0) throw input_error("modulus must be positive");
    for (std::int64_t j = 1; 2 * j < b; ++j) {
      Real v = cot_pi_fraction(j, b);
      cot_[j] = v;
      cot_[b - j] = -v;
    }
  }

  std::int64_t modulus() const noexcept { return b_; }

  /// (1 / 4b) sum_{k=1}^{b-1} cot(pi k a / b) cot(pi k / b). The summand is
  /// symmetric under k -> b - k, so only the lower half is visited.
  Real dedekind_sum(std::int64_t a) const {
    std::int64_t step = a % b_;
    if (step < 0) step += b_;
    Real acc = 0;
    std::int64_t residue = 0;
    const std::int64_t half = (b_ - 1) / 2;
    for (std::int64_t k = 1; k <= half; ++k) {
      residue += step;
      if (residue >= b_) residue -= b_;
      acc += cot_[k] * cot_[residue];
    }
    return acc / (Real(2) * static_cast<Real>(b_));
  }

 private:
  std::int64_t b_;
  std::vector<Real> cot_;
};

/// Largest modulus accepted by the O(b) methods.
inline constexpr std::int64_t kMaxLinearModulus = std::int64_t{1} << 40;

/// Floating-point s(a, b) straight from the cotangent definition.
inline Real dedekind_cotangent(const CoprimePair& p) {
  if (p.b() > kMaxLinearModulus) {
    throw resource_error("instance too large: b=" + p.b().str() + " for the O(b) cotangent sum");
  }
  auto b = static_cast<std::int64_t>(p.b());
  auto a = static_cast<std::int64_t>(p.a() % p.b());
  return CotangentTable(b).dedekind_sum(a);
}

struct FastEvaluation {
  Rational value;
  std::size_t steps = 0;  // number of reciprocity swaps applied
};

/// Exact s(a, b) by Euclid-style recursion: reduce a mod b, then use
/// s(a, b) = rhs(a, b) - s(b, a); s(x, 1) = 0.
inline FastEvaluation dedekind_fast_counted(const CoprimePair& p) {
  // Unroll the recursion into the Euclidean remainder chain, then fold it
  // bottom-up. Each partial value s(a, b) is carried as the integer
  // N = 6b s(a, b); multiplying the recursion through by 12ab gives
  //   N(a, b) = (a^2 + b^2 + 1 - 3ab - 2b N(b mod a, a)) / (2a),
  // an exact division, so no gcd is needed until the end.
  std::vector<std::pair<BigInt, BigInt>> chain;
  BigInt a = p.a() % p.b();
  BigInt b = p.b();
  while (b != 1) {
    chain.emplace_back(a, b);
    BigInt next_a = b % a;
    b = std::move(a);
    a = std::move(next_a);
  }
  BigInt scaled = 0;  // 6 * 1 * s(0, 1)
  BigInt quotient, remainder;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const BigInt& x = it->first;
    const BigInt& y = it->second;
    BigInt numerator = x * x + y * y + 1 - 3 * x * y - 2 * y * scaled;
    boost::multiprecision::divide_qr(numerator, BigInt(2 * x), quotient, remainder);
    if (remainder != 0) {
      throw internal_error("6b s(a,b) not integral at (" + x.str() + "," + y.str() + ")");
    }
    scaled = std::move(quotient);
  }
  FastEvaluation result;
  result.value = chain.empty() ? Rational(0) : Rational(std::move(scaled), 6 * chain.front().second);
  result.steps = chain.size();
  return result;
}

inline Rational dedekind_fast(const CoprimePair& p) { return dedekind_fast_counted(p).value; }

/// Number of division steps Euclid's algorithm takes on (a, b).
inline std::size_t euclid_length(BigInt a, BigInt b) {
  std::size_t steps = 0;
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
    ++steps;
  }
  return steps;
}

enum class DedekindMethod { sawtooth, fast };

struct ReciprocityReport {
  Rational s_ab;
  Rational s_ba;
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// s(a,b) + s(b,a) against the closed form. The sums come from the sawtooth
/// oracle by default; `fast` is for inputs too large for O(b) work.
inline ReciprocityReport reciprocity_check(const CoprimePair& p,
                                           DedekindMethod method = DedekindMethod::sawtooth) {
  auto eval = [method](const CoprimePair& q) {
    return method == DedekindMethod::sawtooth ? dedekind_sawtooth(q) : dedekind_fast(q);
  };
  ReciprocityReport r;
  r.s_ab = eval(p);
  r.s_ba = eval(p.swapped());
  r.lhs = r.s_ab + r.s_ba;
  r.rhs = reciprocity_rhs(p.a(), p.b());
  r.holds = r.lhs == r.rhs;
  return r;
}

/// Checks s(a, b) = s(a mod b, b) for a > b, comparing the reduced sawtooth
/// sum with the unreduced literal one.
inline bool mod_reduction_check(const BigInt& a, const BigInt& b) {
  if (a <= b) throw input_error("mod reduction check needs a > b");
  CoprimePair pair(a, b);
  CoprimePair reduced = b == 1 ? pair : CoprimePair(a % b, b);
  return dedekind_sawtooth(reduced) == dedekind_sawtooth_literal(a, b);
}

}  // namespace dsum
