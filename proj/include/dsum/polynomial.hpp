#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dsum/errors.hpp"
#include "dsum/rational.hpp"

namespace dsum {

/// Polynomial in t with exact rational coefficients; coefficient j multiplies
/// t^j. Trailing zeros are trimmed, leaving at least one coefficient.
class RationalPolynomial {
 public:
  RationalPolynomial() : coeffs_{Rational(0)} {}

  explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.emplace_back(0);
    trim();
  }

  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  /// Coefficient of t^j; zero beyond the degree.
  Rational coefficient(std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j] : Rational(0);
  }

  /// Degree, with the zero polynomial reported as degree 0.
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }

  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

  /// Exact value sum c_j t^j, by Horner's rule.
  Rational operator()(const Rational& t) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= t;
      acc += *it;
    }
    return acc;
  }

  /// Human-readable form in descending powers, e.g. "3t^2 + 3t + 1" or
  /// "(1/2)t^2 + (3/2)t + 1".
  std::string to_string(char var = 't') const {
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Rational& c = coeffs_[k];
      if (c.is_zero() && !(k == 0 && out.empty())) continue;
      Rational mag = c.sign() < 0 ? -c : c;
      if (out.empty()) {
        if (c.sign() < 0) out += '-';
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      if (k == 0) {
        out += mag.to_string();
        continue;
      }
      if (mag != Rational(1)) {
        out += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
      }
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const RationalPolynomial& p, std::int64_t t) { return p(Rational(t)); }

struct InterpolationPoint {
  std::int64_t t;
  Rational value;
};

/// The unique polynomial of degree < points.size() through every point.
///
/// Newton divided differences in exact arithmetic, then expansion of the
/// Newton form into monomial coefficients.
inline RationalPolynomial interpolate(std::span<const InterpolationPoint> points) {
  if (points.empty()) throw input_error("interpolation needs at least one point");
  std::set<std::int64_t> seen;
  for (const auto& pt : points) {
    if (!seen.insert(pt.t).second) {
      throw input_error("duplicate abscissa t=" + std::to_string(pt.t));
    }
  }

  const std::size_t n = points.size();
  std::vector<Rational> dd;
  dd.reserve(n);
  for (const auto& pt : points) dd.push_back(pt.value);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational span_t(points[i].t - points[i - level].t);
      dd[i] = (dd[i] - dd[i - 1]) / span_t;
    }
  }

  // Horner on the Newton form: P = dd[0] + (t - t0)(dd[1] + (t - t1)(...)).
  std::vector<Rational> coeffs{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    Rational node(points[i].t);
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * node;
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return RationalPolynomial(std::move(coeffs));
}

inline RationalPolynomial interpolate(std::initializer_list<InterpolationPoint> points) {
  return interpolate(std::span<const InterpolationPoint>(points.begin(), points.size()));
}

}  // namespace dsum
