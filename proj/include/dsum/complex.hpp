#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace dsum {

// Floating-point precision of every non-exact computation. Switching to
// long double is a one-line change here.
using Real = double;
using ComplexValue = std::complex<Real>;

inline constexpr Real kPi = std::numbers::pi_v<Real>;

/// Neumaier-compensated running sum. The order of add() calls fixes the
/// result bit-for-bit.
template <class T>
class CompensatedSum {
 public:
  void add(T value) {
    T t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      comp_ += (sum_ - t) + value;
    } else {
      comp_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

template <class T>
class CompensatedSum<std::complex<T>> {
 public:
  void add(const std::complex<T>& value) {
    re_.add(value.real());
    im_.add(value.imag());
  }
  std::complex<T> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<T> re_;
  CompensatedSum<T> im_;
};

/// cot(pi * j / c) for 0 < j < c, with the argument folded into (0, pi/2]
/// so sin() never sees a value near pi.
inline Real cot_pi_fraction(long long j, long long c) {
  j %= c;
  if (j < 0) j += c;
  if (2 * j == c) return Real(0);
  bool mirrored = 2 * j > c;
  if (mirrored) j = c - j;
  Real x = kPi * static_cast<Real>(j) / static_cast<Real>(c);
  Real v = std::cos(x) / std::sin(x);
  return mirrored ? -v : v;
}

}  // namespace dsum
