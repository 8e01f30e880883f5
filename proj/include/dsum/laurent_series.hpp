#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dsum/errors.hpp"

namespace dsum {

/// Laurent series in s known on the window [min_order, truncation_order]:
/// coefficients below min_order are exactly zero, those above the
/// truncation order are unknown.
template <class T>
class TruncatedLaurentSeries {
 public:
  TruncatedLaurentSeries(int min_order, std::vector<T> coeffs)
      : min_order_(min_order), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw truncation_error("Laurent series window is empty");
  }

  /// All-zero series on [min_order, truncation_order].
  static TruncatedLaurentSeries zero(int min_order, int truncation_order) {
    if (truncation_order < min_order) {
      throw truncation_error("Laurent series window [" + std::to_string(min_order) + "," +
                             std::to_string(truncation_order) + "] is empty");
    }
    return TruncatedLaurentSeries(min_order,
                                  std::vector<T>(static_cast<std::size_t>(truncation_order - min_order + 1)));
  }

  /// s^k with the given truncation order.
  static TruncatedLaurentSeries monomial(int k, int truncation_order, T coeff = T(1)) {
    auto out = zero(k, truncation_order);
    out.coeffs_[0] = coeff;
    return out;
  }

  int min_order() const noexcept { return min_order_; }
  int truncation_order() const noexcept { return min_order_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }

  bool contains(int k) const noexcept { return k <= truncation_order(); }

  /// Coefficient of s^k: zero below the window, an error above it.
  T coefficient(int k) const {
    if (k < min_order_) return T{};
    if (k > truncation_order()) {
      throw truncation_error("coefficient of s^" + std::to_string(k) + " lies beyond truncation order " +
                             std::to_string(truncation_order()));
    }
    return coeffs_[static_cast<std::size_t>(k - min_order_)];
  }

  /// Sum of the retained terms at the point s.
  T evaluate(const T& s) const {
    T acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
    T lead(1);
    if (min_order_ >= 0) {
      for (int k = 0; k < min_order_; ++k) lead *= s;
    } else {
      for (int k = 0; k < -min_order_; ++k) lead /= s;
    }
    return acc * lead;
  }

  TruncatedLaurentSeries& operator*=(const T& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }
  friend TruncatedLaurentSeries operator*(TruncatedLaurentSeries x, const T& scalar) { return x *= scalar; }
  friend TruncatedLaurentSeries operator*(const T& scalar, TruncatedLaurentSeries x) { return x *= scalar; }

  /// Window [min(m1, m2), min(K1, K2)].
  friend TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& x, const TruncatedLaurentSeries& y) {
    const int lo = std::min(x.min_order_, y.min_order_);
    const int hi = std::min(x.truncation_order(), y.truncation_order());
    auto out = zero(lo, hi);
    for (int k = lo; k <= hi; ++k) out.coeffs_[static_cast<std::size_t>(k - lo)] = x.coefficient(k) + y.coefficient(k);
    return out;
  }

  friend TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& x, const TruncatedLaurentSeries& y) {
    return x + y * T(-1);
  }

  /// Cauchy product on window [m1 + m2, min(m1 + K2, m2 + K1)].
  friend TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& x, const TruncatedLaurentSeries& y) {
    const int lo = x.min_order_ + y.min_order_;
    const int hi = std::min(x.min_order_ + y.truncation_order(), y.min_order_ + x.truncation_order());
    auto out = zero(lo, hi);
    const std::size_t len = out.coeffs_.size();
    for (std::size_t i = 0; i < x.coeffs_.size() && i < len; ++i) {
      for (std::size_t j = 0; j < y.coeffs_.size() && i + j < len; ++j) {
        out.coeffs_[i + j] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
    return out;
  }

  TruncatedLaurentSeries& operator+=(const TruncatedLaurentSeries& y) { return *this = *this + y; }
  TruncatedLaurentSeries& operator*=(const TruncatedLaurentSeries& y) { return *this = *this * y; }

 private:
  int min_order_;
  std::vector<T> coeffs_;
};

}  // namespace dsum
