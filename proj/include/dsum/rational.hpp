#pragma once

/// Exact rational arithmetic over arbitrary-precision integers.
///
/// A Rational is always stored in lowest terms with a positive denominator;
/// zero is 0/1. The text form is "p/q", or "p" when q = 1, with the sign
/// carried on the numerator.

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dsum/errors.hpp"

namespace dsum {

using BigInt = boost::multiprecision::cpp_int;

/// gcd of two nonnegative integers, with gcd(0, 0) = 0.
inline BigInt gcd(const BigInt& u, const BigInt& v) {
  if (u == 0) return abs(v);
  if (v == 0) return abs(u);
  return boost::multiprecision::gcd(u, v);
}

inline std::int64_t gcd(std::int64_t u, std::int64_t v) {
  if (u < 0) u = -u;
  if (v < 0) v = -v;
  while (v != 0) {
    std::int64_t r = u % v;
    u = v;
    v = r;
  }
  return u;
}

/// Parses an optionally signed decimal integer. Throws input_error on
/// anything else (empty string, stray characters, embedded spaces).
inline BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw input_error("not an integer: '" + std::string(text) + "'");
  }
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw input_error("not an integer: '" + std::string(text) + "'");
    }
  }
  BigInt value{std::string(digits)};
  return negative ? BigInt(-value) : value;
}

class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral I>
  Rational(I value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(BigInt numerator, BigInt denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw arithmetic_error("rational with zero denominator");
    normalize();
  }

  /// Parses "p/q" or "p". The result is normalized, so "2/4" reads as 1/2.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    BigInt n = parse_bigint(text.substr(0, slash));
    BigInt d = parse_bigint(text.substr(slash + 1));
    if (d == 0) throw input_error("zero denominator in '" + std::string(text) + "'");
    return Rational(std::move(n), std::move(d));
  }

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  /// Largest integer not exceeding the value.
  BigInt floor() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
  }

  /// Correctly rounded for any magnitude, including values whose numerator
  /// and denominator individually overflow a double.
  double to_double() const {
    using Float = boost::multiprecision::cpp_bin_float_double_extended;
    return static_cast<double>(Float(num_) / Float(den_));
  }

  std::string to_string() const {
    std::string out = num_.str();
    if (den_ != 1) {
      out += '/';
      out += den_.str();
    }
    return out;
  }

  Rational operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  Rational& operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw arithmetic_error("division by zero");
    BigInt n = num_ * o.den_;
    BigInt d = den_ * o.num_;
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
  }

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    BigInt lhs = x.num_ * y.den_;
    BigInt rhs = y.num_ * x.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace dsum
