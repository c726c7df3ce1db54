#include <gtest/gtest.h>

#include "lpq/numeric_oracle.hpp"
#include "lpq/series.hpp"

using lpq::Rational;
using lpq::RealPolynomial;

TEST(Oracle, QuadraticPair) {
  const auto c = lpq::oracle_census_double(RealPolynomial({Rational(1), Rational(0), Rational(1)}));
  EXPECT_EQ(c.real_count, 0);
  EXPECT_EQ(c.nonreal_count, 2);
}

TEST(Oracle, DoubleRootStaysReal) {
  const auto p = RealPolynomial::from_roots({Rational(-2), Rational(-2), Rational(1, 3)});
  EXPECT_EQ(lpq::oracle_census_auto(p).real_count, 3);
}

TEST(Oracle, ZeroRootsFactoredExactly) {
  const auto c = lpq::oracle_census_double(RealPolynomial::from_roots({Rational(0), Rational(0), Rational(5)}));
  EXPECT_EQ(c.real_count, 3);
}

TEST(Oracle, GradedTruncationHasOneInnerPair) {
  // q_n = 3.2 - 0.2/n, degree 60: one nonreal pair near -2.2455 +- 0.4956i
  // (an mpmath run at 60 digits); its mirror image sits beyond 1e29.
  const auto s = lpq::CoefficientSeries::from_rule(lpq::QuotientRule::limit_increasing(Rational(16, 5), Rational(1, 5)));
  const auto c = lpq::oracle_census(s.section(60), 60, 1e10);
  EXPECT_EQ(c.nonreal_pairs_inside, 1);
  bool found = false;
  for (const auto& z : c.roots) {
    found = found || (std::abs(z.real() + 2.24554) < 1e-4 && std::abs(std::abs(z.imag()) - 0.495597) < 1e-4);
  }
  EXPECT_TRUE(found);
}
