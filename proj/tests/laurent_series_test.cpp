#include <gtest/gtest.h>

#include <complex>

#include "dsum/laurent_series.hpp"
#include "dsum/rational.hpp"

namespace dsum {
namespace {

using Series = TruncatedLaurentSeries<Rational>;

TEST(LaurentSeries, WindowOfProduct) {
  Series x(-1, {1, 2, 3, 4});    // [-1, 2]
  Series y(-2, {5, 6, 7});       // [-2, 0]
  Series p = x * y;
  EXPECT_EQ(p.min_order(), -3);
  EXPECT_EQ(p.truncation_order(), std::min(-1 + 0, -2 + 2));
}

TEST(LaurentSeries, MonomialProduct) {
  auto inv = Series::monomial(-1, 3);
  auto lin = Series::monomial(1, 3);
  auto p = inv * lin;
  EXPECT_EQ(p.min_order(), 0);
  EXPECT_EQ(p.truncation_order(), 2);
  EXPECT_EQ(p.coefficient(0), Rational(1));
  EXPECT_EQ(p.coefficient(1), Rational(0));
}

TEST(LaurentSeries, AdditiveIdentity) {
  Series x(-1, {Rational(1, 2), 3, Rational(-2, 7)});
  Series sum = x + Series::zero(-1, 1);
  EXPECT_EQ(sum.min_order(), x.min_order());
  EXPECT_EQ(sum.truncation_order(), x.truncation_order());
  for (int k = -1; k <= 1; ++k) EXPECT_EQ(sum.coefficient(k), x.coefficient(k));
}

TEST(LaurentSeries, BinomialSquare) {
  Series x(-1, {1, 1, 0, 0});  // s^-1 + 1 + O(s^3)
  Series sq = x * x;
  EXPECT_EQ(sq.min_order(), -2);
  EXPECT_EQ(sq.truncation_order(), 1);
  EXPECT_EQ(sq.coefficient(-2), Rational(1));
  EXPECT_EQ(sq.coefficient(-1), Rational(2));
  EXPECT_EQ(sq.coefficient(0), Rational(1));
  EXPECT_EQ(sq.coefficient(1), Rational(0));
}

TEST(LaurentSeries, SumTakesNarrowerTruncation) {
  Series x(-1, {1, 1, 1, 1});  // [-1, 2]
  Series y(0, {1, 1});         // [0, 1]
  Series s = x + y;
  EXPECT_EQ(s.min_order(), -1);
  EXPECT_EQ(s.truncation_order(), 1);
  EXPECT_EQ(s.coefficient(0), Rational(2));
}

TEST(LaurentSeries, CoefficientOutsideWindow) {
  Series x(-1, {1, 1});
  EXPECT_EQ(x.coefficient(-5), Rational(0));
  EXPECT_THROW(x.coefficient(1), truncation_error);
}

TEST(LaurentSeries, EmptyWindowIsAnError) {
  EXPECT_THROW(Series(0, {}), truncation_error);
  EXPECT_THROW(Series::zero(2, 1), truncation_error);
}

TEST(LaurentSeries, WindowRuleProperty) {
  // Every pair of windows in a small grid obeys the product and sum rules.
  for (int m1 = -3; m1 <= 2; ++m1) {
    for (int k1 = m1; k1 <= m1 + 4; ++k1) {
      for (int m2 = -3; m2 <= 2; ++m2) {
        for (int k2 = m2; k2 <= m2 + 4; ++k2) {
          auto x = Series::zero(m1, k1), y = Series::zero(m2, k2);
          auto p = x * y;
          EXPECT_EQ(p.min_order(), m1 + m2);
          EXPECT_EQ(p.truncation_order(), std::min(m1 + k2, m2 + k1));
          auto s = x + y;
          EXPECT_EQ(s.min_order(), std::min(m1, m2));
          EXPECT_EQ(s.truncation_order(), std::min(k1, k2));
        }
      }
    }
  }
}

TEST(LaurentSeries, ScalingKeepsWindow) {
  Series x(3, {1, 2});
  auto y = x * Rational(3);
  EXPECT_EQ(y.min_order(), 3);
  EXPECT_EQ(y.truncation_order(), 4);
  EXPECT_EQ(y.coefficient(4), Rational(6));
}

TEST(LaurentSeries, EvaluateComplex) {
  using C = std::complex<double>;
  TruncatedLaurentSeries<C> x(-1, {C(2, 0), C(1, 0), C(0, 3)});
  C s(0.1, 0.2);
  C expected = C(2, 0) / s + C(1, 0) + C(0, 3) * s;
  EXPECT_NEAR(std::abs(x.evaluate(s) - expected), 0.0, 1e-12);
}

}  // namespace
}  // namespace dsum
