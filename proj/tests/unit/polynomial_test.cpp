#include <gtest/gtest.h>

#include <random>

#include "lpq/errors.hpp"
#include "lpq/polynomial.hpp"
#include "oracles.hpp"

using lpq::Rational;
using lpq::RealPolynomial;

TEST(Polynomial, TrimsTrailingZeros) {
  const RealPolynomial p({Rational(1), Rational(2), Rational(0), Rational(0)});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(RealPolynomial({Rational(0)}).is_zero());
  EXPECT_EQ(RealPolynomial().degree(), -1);
}

TEST(Polynomial, EvaluationAndSign) {
  const RealPolynomial p = RealPolynomial::from_roots({Rational(-1), Rational(2), Rational(1, 3)});
  EXPECT_EQ(p(Rational(2)), 0);
  EXPECT_EQ(p.sign_at(Rational(1, 3)), 0);
  EXPECT_EQ(p.sign_at(Rational(3)), 1);
  EXPECT_EQ(p.sign_at(Rational(1, 2)), -1);
  EXPECT_EQ(p.sign_at(Rational(-2)), -1);
  const lpq::Interval v = p(lpq::Interval::point(Rational(5, 7)));
  EXPECT_TRUE(v.contains(p(Rational(5, 7))));
}

TEST(Polynomial, DivmodReconstructs) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const RealPolynomial a = lpq::testing::random_polynomial(rng, 7);
    const RealPolynomial b = lpq::testing::random_polynomial(rng, 3);
    const auto [q, r] = lpq::divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(Polynomial, GcdOfSharedFactor) {
  const RealPolynomial f = RealPolynomial::from_roots({Rational(1), Rational(2)});
  const RealPolynomial g = RealPolynomial::from_roots({Rational(2), Rational(-5)});
  EXPECT_EQ(lpq::gcd(f, g), RealPolynomial::from_roots({Rational(2)}));
}

TEST(Polynomial, YunRecoversMultiplicities) {
  const RealPolynomial p = RealPolynomial::from_roots(
      {Rational(1), Rational(-2), Rational(-2), Rational(3), Rational(3), Rational(3)});
  const auto factors = lpq::squarefree_decomposition(p);
  ASSERT_EQ(factors.size(), 3U);
  EXPECT_EQ(factors[0].second, 1);
  EXPECT_EQ(factors[0].first, RealPolynomial::from_roots({Rational(1)}));
  EXPECT_EQ(factors[1].second, 2);
  EXPECT_EQ(factors[1].first, RealPolynomial::from_roots({Rational(-2)}));
  EXPECT_EQ(factors[2].second, 3);
}

TEST(Polynomial, ScaledAndReflected) {
  const RealPolynomial p({Rational(1), Rational(1), Rational(1)});
  EXPECT_EQ(p.scaled(Rational(2)), RealPolynomial({Rational(1), Rational(2), Rational(4)}));
  EXPECT_EQ(p.reflected(), RealPolynomial({Rational(1), Rational(-1), Rational(1)}));
}

TEST(Polynomial, PrimitiveIntegerForm) {
  const RealPolynomial p({Rational(1, 2), Rational(-3, 4), Rational(1, 4)});
  const auto ints = lpq::primitive_integer_coefficients(p);
  ASSERT_EQ(ints.size(), 3U);
  EXPECT_EQ(ints[0], 2);
  EXPECT_EQ(ints[1], -3);
  EXPECT_EQ(ints[2], 1);
}

TEST(Polynomial, ParseList) {
  EXPECT_EQ(lpq::parse_polynomial("1, 1, 1/4"), RealPolynomial({Rational(1), Rational(1), Rational(1, 4)}));
  EXPECT_THROW(lpq::parse_polynomial("0 0"), lpq::InputError);
}
