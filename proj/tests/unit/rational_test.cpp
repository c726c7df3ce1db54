#include <gtest/gtest.h>

#include "lpq/errors.hpp"
#include "lpq/rational.hpp"

using lpq::Rational;

TEST(RationalParse, FractionsAndDecimals) {
  EXPECT_EQ(lpq::parse_rational("1/4"), Rational(1, 4));
  EXPECT_EQ(lpq::parse_rational("3.2"), Rational(16, 5));
  EXPECT_EQ(lpq::parse_rational("-1e-3"), Rational(-1, 1000));
  EXPECT_EQ(lpq::parse_rational("2.5E+2"), Rational(250));
  EXPECT_EQ(lpq::parse_rational("\xE2\x88\x92" "1/4"), Rational(-1, 4));
  EXPECT_EQ(lpq::parse_rational(" 6/4 "), Rational(3, 2));
}

TEST(RationalParse, RejectsGarbage) {
  EXPECT_THROW(lpq::parse_rational("abc"), lpq::InputError);
  EXPECT_THROW(lpq::parse_rational("1/0"), lpq::InputError);
  EXPECT_THROW(lpq::parse_rational(""), lpq::InputError);
}

TEST(RationalFormat, ExactDecimal) {
  EXPECT_EQ(lpq::exact_decimal(Rational(-31, 10)), "-3.1");
  EXPECT_EQ(lpq::exact_decimal(Rational(1, 3)), "");
  EXPECT_EQ(lpq::to_fraction_string(lpq::make_rational(6, 4)), "3/2");
  EXPECT_EQ(lpq::make_rational(-6, -4), Rational(3, 2));
}

TEST(RationalArith, PowAndRounding) {
  EXPECT_EQ(lpq::pow(Rational(2), -3), Rational(1, 8));
  EXPECT_EQ(lpq::floor(Rational(-7, 2)), -4);
  EXPECT_EQ(lpq::ceil(Rational(7, 2)), 4);
  Rational r;
  EXPECT_TRUE(lpq::exact_sqrt(Rational(9, 4), r));
  EXPECT_EQ(r, Rational(3, 2));
  EXPECT_FALSE(lpq::exact_sqrt(Rational(2), r));
}
