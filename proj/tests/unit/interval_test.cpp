#include <gtest/gtest.h>

#include <random>

#include "lpq/errors.hpp"
#include "lpq/interval.hpp"

using lpq::Interval;
using lpq::Rational;

TEST(Interval, EnclosesRationalArithmetic) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (int i = 0; i < 500; ++i) {
    const Rational x = lpq::make_rational(d(rng), 1 + std::abs(d(rng)));
    const Rational y = lpq::make_rational(d(rng), 1 + std::abs(d(rng)));
    const Interval X = Interval::point(x, 64);
    const Interval Y = Interval::point(y, 64);
    EXPECT_TRUE((X + Y).contains(Rational(x + y)));
    EXPECT_TRUE((X - Y).contains(Rational(x - y)));
    EXPECT_TRUE((X * Y).contains(Rational(x * y)));
    if (y != 0) {
      EXPECT_TRUE((X / Y).contains(Rational(x / y)));
    }
    EXPECT_TRUE(lpq::sqr(X).contains(Rational(x * x)));
    EXPECT_TRUE(lpq::pow(X, 5L).contains(lpq::pow(x, 5)));
  }
}

TEST(Interval, SquareOfStraddlingIntervalIsNonnegative) {
  const Interval x = Interval::bounds(Rational(-1), Rational(2));
  const Interval s = lpq::sqr(x);
  EXPECT_TRUE(s.certainly_nonnegative());
  EXPECT_TRUE(s.contains(Rational(4)));
}

TEST(Interval, DivisionByZeroEnclosureThrows) {
  const Interval x = Interval::bounds(Rational(-1), Rational(1));
  EXPECT_THROW(Interval::point(1L) / x, lpq::PrecisionError);
}

TEST(Interval, SelfSubtractionContainsZero) {
  Interval x = Interval::bounds(Rational(1), Rational(2));
  x -= x;
  EXPECT_TRUE(x.contains(Rational(-1)));
  EXPECT_TRUE(x.contains(Rational(1)));
}

TEST(Interval, SqrtAndPi) {
  const Interval two = lpq::sqrt(Interval::point(2L, 200));
  EXPECT_TRUE(lpq::sqr(two).contains(Rational(2)));
  const Interval pi = Interval::pi(100);
  EXPECT_TRUE(lpq::parse_interval("3.14159265358979323846 +- 1e-20").contains(pi));
  EXPECT_LT(pi.width_upper(), 1e-29);
}

TEST(IntervalFormat, RoundTripEncloses) {
  const Interval x = Interval::bounds(Rational(1, 3), Rational(1, 3) + Rational(1, 1000000), 128);
  const std::string text = lpq::format_interval(x, 12);
  const Interval back = lpq::parse_interval(text);
  EXPECT_TRUE(back.contains(x)) << text;
  EXPECT_NE(text.find("\xC2\xB1"), std::string::npos);
}

TEST(IntervalFormat, ExactRationalPrintsExactly) {
  EXPECT_EQ(lpq::format_rational(Rational(31, 10)), "3.1 \xC2\xB1 0");
  const Interval third = lpq::parse_interval(lpq::format_rational(Rational(1, 3)));
  EXPECT_TRUE(third.contains(Rational(1, 3)));
  EXPECT_TRUE(lpq::parse_interval("2 +- 0.5").contains(Rational(5, 2)));
}
