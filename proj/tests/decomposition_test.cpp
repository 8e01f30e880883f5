#include <gtest/gtest.h>

#include "dsum/decomposition.hpp"

namespace dsum {
namespace {

TEST(Decompose, TwoThree) {
  auto d = decompose_constant_term(CoprimePair(2, 3));
  EXPECT_EQ(d.contrib_a, Rational(2, 9));
  EXPECT_EQ(d.contrib_b, Rational(1, 8));
  EXPECT_EQ(d.contrib_triple, Rational(47, 72));
  EXPECT_EQ(d.total, Rational(1));
}

TEST(Decompose, OneOne) {
  auto d = decompose_constant_term(CoprimePair(1, 1));
  EXPECT_EQ(d.contrib_a, Rational(0));
  EXPECT_EQ(d.contrib_b, Rational(0));
  EXPECT_EQ(d.contrib_triple, Rational(1));
  EXPECT_EQ(d.total, Rational(1));
}

TEST(Decompose, TotalIsOneForAllPairsBelow150) {
  for (std::int64_t a = 1; a <= 150; ++a) {
    for (std::int64_t b = 1; b <= 150; ++b) {
      if (gcd(a, b) != 1) continue;
      auto d = decompose_constant_term(CoprimePair(a, b));
      ASSERT_EQ(d.total, Rational(1)) << a << "," << b;
      ASSERT_EQ(d.contrib_a + d.contrib_b + d.contrib_triple, d.total);
    }
  }
}

TEST(ContributionSupport, Sets) {
  EXPECT_EQ(contribution_support(2, 3, Contribution::a), (std::vector<std::int64_t>{2, 4}));
  EXPECT_EQ(contribution_support(2, 3, Contribution::b), (std::vector<std::int64_t>{3}));
  EXPECT_EQ(contribution_support(2, 3, Contribution::triple), (std::vector<std::int64_t>{6}));
  EXPECT_TRUE(contribution_support(1, 1, Contribution::a).empty());
}

TEST(IndicatorSupports, TwoPoleTermsAndLonePoleAtAbAreEmpty) {
  for (std::int64_t a = 1; a <= 30; ++a) {
    for (std::int64_t b = 1; b <= 30; ++b) {
      if (gcd(a, b) != 1) continue;
      auto s = indicator_supports(a, b);
      EXPECT_TRUE(s.a_and_b_not_ab.empty());
      EXPECT_TRUE(s.a_and_ab_not_b.empty());
      EXPECT_TRUE(s.b_and_ab_not_a.empty());
      EXPECT_TRUE(s.only_ab.empty());
      EXPECT_EQ(s.all_three, (std::vector<std::int64_t>{a * b}));
      EXPECT_EQ(s.only_a, contribution_support(a, b, Contribution::a));
      EXPECT_EQ(s.only_b, contribution_support(a, b, Contribution::b));
    }
  }
}

TEST(NumericContribution, TwoThree) {
  CoprimePair p(2, 3);
  EXPECT_NEAR(numeric_contribution_check(p, Contribution::triple).real(), 47.0 / 72.0, 1e-8);
  EXPECT_NEAR(numeric_contribution_check(p, Contribution::a).real(), 2.0 / 9.0, 1e-8);
  EXPECT_NEAR(numeric_contribution_check(p, Contribution::b).real(), 1.0 / 8.0, 1e-8);
  EXPECT_EQ(numeric_contribution_check(CoprimePair(1, 1), Contribution::a), ComplexValue(0, 0));
}

TEST(NumericContribution, MatchesExactForSmallProducts) {
  for (std::int64_t a = 1; a <= 30; ++a) {
    for (std::int64_t b = 1; a * b <= 60; ++b) {
      if (gcd(a, b) != 1) continue;
      CoprimePair p(a, b);
      auto d = decompose_constant_term(p);
      auto na = numeric_contribution_check(p, Contribution::a);
      auto nb = numeric_contribution_check(p, Contribution::b);
      auto nt = numeric_contribution_check(p, Contribution::triple);
      EXPECT_NEAR(na.real(), d.contrib_a.to_double(), 1e-8) << a << "," << b;
      EXPECT_NEAR(nb.real(), d.contrib_b.to_double(), 1e-8) << a << "," << b;
      EXPECT_NEAR(nt.real(), d.contrib_triple.to_double(), 1e-8) << a << "," << b;
      EXPECT_NEAR(na.imag() + nb.imag() + nt.imag(), 0.0, 1e-9);
    }
  }
}

}  // namespace
}  // namespace dsum
