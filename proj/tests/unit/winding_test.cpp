#include <gtest/gtest.h>

#include <random>

#include "lpq/errors.hpp"
#include "lpq/numeric_oracle.hpp"
#include "lpq/winding.hpp"
#include "oracles.hpp"

using lpq::ComplexFunction;
using lpq::Interval;
using lpq::Rational;
using lpq::RealPolynomial;

TEST(Winding, Monomial) {
  const auto f = ComplexFunction::from_polynomial(RealPolynomial::monomial(Rational(1), 3));
  EXPECT_EQ(lpq::winding_number(f, Rational(1)), 3);
}

TEST(Winding, ExponentialTruncationHasNoZerosOnRadiusTwo) {
  // exp(z) = sum z^k/k!; tail beyond k = 30 on |z| = 2 is below 2 * 2^31/31!.
  std::vector<Rational> c;
  Rational f = 1;
  for (int k = 0; k <= 30; ++k) {
    c.push_back(1 / f);
    f *= k + 1;
  }
  auto fn = ComplexFunction::from_polynomial(RealPolynomial(c));
  fn.tail = Interval::point(Rational(2) * lpq::pow(Rational(2), 31) / f);
  EXPECT_EQ(lpq::winding_number(fn, Rational(2)), 0);
}

TEST(Winding, CirclePointsAreOnTheCircle) {
  for (int i = -8; i <= 8; ++i) {
    const Rational t = lpq::make_rational(i, 8);
    for (bool far : {false, true}) {
      const auto p = lpq::circle_point(t, Rational(3), far);
      EXPECT_EQ(p.re * p.re + p.im * p.im, Rational(9));
    }
  }
}

TEST(Winding, RootOnCircleIsInconclusive) {
  const auto f = ComplexFunction::from_polynomial(RealPolynomial::from_roots({Rational(1)}));
  lpq::WindingOptions opt;
  opt.max_arcs = 4096;
  EXPECT_THROW(lpq::winding_number(f, Rational(1), opt), lpq::InconclusiveError);
}

TEST(Winding, MatchesRootsInsideDisk) {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const RealPolynomial p = lpq::testing::random_polynomial(rng, 2 + i % 8);
    const auto census = lpq::oracle_census_double(p);
    const double radius = 1.5;
    int inside = 0;
    bool near = false;
    for (const auto& z : census.roots) {
      inside += std::abs(z) < radius;
      near = near || std::abs(std::abs(z) - radius) < 1e-3;
    }
    if (near) {
      continue;
    }
    ++checked;
    EXPECT_EQ(lpq::winding_number(ComplexFunction::from_polynomial(p), Rational(3, 2)), inside) << lpq::to_string(p);
  }
  EXPECT_GT(checked, 30);
}
