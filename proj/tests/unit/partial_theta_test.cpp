#include <gtest/gtest.h>

#include <cmath>

#include "lpq/errors.hpp"
#include "lpq/partial_theta.hpp"
#include "lpq/series.hpp"
#include "lpq/sturm.hpp"
#include "oracles.hpp"

using lpq::Interval;
using lpq::Rational;
using lpq::ThetaParams;

namespace {

const Rational kTol(1, 1000000000);

}  // namespace

TEST(ThetaEval, ConstantTerm) {
  for (int a : {2, 3, 7}) {
    const Interval v = lpq::theta_eval(ThetaParams::from_a(Rational(a)), Rational(0), kTol);
    EXPECT_TRUE(v.contains(Rational(1)));
  }
}

TEST(ThetaEval, AtOneAndMinusOne) {
  const auto p = ThetaParams::from_a(Rational(2));
  const Interval plus = lpq::theta_eval(p, Rational(1), kTol);
  EXPECT_LE(plus.width_upper(), 1e-9);
  EXPECT_NEAR(plus.mid_double(), static_cast<double>(lpq::testing::theta_naive(2, 1)), 1e-9);
  EXPECT_NEAR(plus.mid_double(), 1.56447, 1e-5);
  const Interval minus = lpq::theta_eval(p, Rational(-1), kTol);
  EXPECT_TRUE(minus.certainly_positive());
  EXPECT_TRUE(minus.certainly_less(Interval::point(1L)));
  // Alternating partial sums bracket the value.
  EXPECT_GT(minus.mid_double(), 1 - 0.5);
  EXPECT_LT(minus.mid_double(), 1 - 0.5 + 1.0 / 16);
}

TEST(ThetaEval, LargeArgumentMatchesNaiveSum) {
  const auto p = ThetaParams::from_a2(Rational(16, 5));
  for (int x : {-40, -7, 5, 30}) {
    const Interval v = lpq::theta_eval(p, Rational(x), Rational(1, 1000000));
    const double ref = static_cast<double>(lpq::testing::theta_naive(std::sqrt(3.2L), x));
    EXPECT_NEAR(v.mid_double(), ref, 1e-6 + 1e-15 * std::fabs(ref));
  }
}

TEST(SectionPoly, ExactSectionsAtAEqualsTwo) {
  const auto p = ThetaParams::from_a(Rational(2));
  const auto s2 = lpq::exact_section(p, 2);
  ASSERT_TRUE(s2);
  EXPECT_EQ(*s2, lpq::RealPolynomial({Rational(1), Rational(1, 2), Rational(1, 16)}));
  const auto s3 = lpq::exact_section(p, 3);
  EXPECT_EQ(s3->coefficient(3), lpq::pow(Rational(2), -9));
  EXPECT_FALSE(lpq::exact_section(ThetaParams::from_a2(Rational(3)), 3));
}

TEST(SectionPoly, QuotientsAreConstantA2) {
  for (const Rational a2 : {Rational(4), Rational(31, 10), Rational(7, 3)}) {
    const auto s = lpq::scaled_section(a2, 9);
    const auto prof = lpq::quotients(lpq::CoefficientSeries::from_entries(s.coefficients()), 9);
    for (const auto& q : prof.q) {
      EXPECT_EQ(q, a2);
    }
  }
  const auto p = ThetaParams::from_a(Rational(3, 2));
  const auto s = lpq::exact_section(p, 8);
  for (const auto& q : lpq::quotients(lpq::CoefficientSeries::from_entries(s->coefficients()), 8).q) {
    EXPECT_EQ(q, Rational(9, 4));
  }
}

TEST(SectionPoly, IntervalCoefficientsEncloseExact) {
  const auto p = ThetaParams::from_a(Rational(5, 2));
  const auto c = lpq::section_coefficients(p, 6);
  const auto e = lpq::exact_section(p, 6);
  for (int j = 0; j <= 6; ++j) {
    EXPECT_TRUE(c[static_cast<std::size_t>(j)].contains(e->coefficient(j)));
  }
}

TEST(SectionInLp, BoundaryDoubleRootAtFour) {
  const auto v = lpq::section_in_lp(ThetaParams::from_a2(Rational(4)), 2);
  EXPECT_TRUE(v.in_lp);
  EXPECT_TRUE(v.agreement);
}

TEST(SectionInLp, BelowFourFailsForQuadratic) {
  const auto v = lpq::section_in_lp(ThetaParams::from_a2(Rational(39, 10)), 2);
  EXPECT_FALSE(v.in_lp);
  EXPECT_EQ(v.method, "both");
  EXPECT_TRUE(v.agreement);
}

TEST(SectionInLp, CubicBoundaryAtThree) {
  const auto v = lpq::section_in_lp(ThetaParams::from_a2(Rational(3)), 3);
  EXPECT_TRUE(v.in_lp);
  EXPECT_TRUE(v.exact.value_or(false));
}

TEST(SectionInLp, WitnessLiesInScaledRange) {
  const auto v = lpq::section_in_lp(ThetaParams::from_a2(Rational(7, 2)), 6);
  ASSERT_TRUE(v.in_lp);
  ASSERT_TRUE(v.witness_s);
  EXPECT_GT(*v.witness_s, 1);
  EXPECT_LT(*v.witness_s, Rational(7, 2));
  EXPECT_TRUE(v.witness_value->certainly_nonpositive());
}

TEST(SectionInLp, IrrationalParameter) {
  // a^2 = 2 sqrt(3) ~ 3.4641 lies above every c_n with n >= 4.
  const Interval a2 = lpq::sqrt(Interval::point(12L, 256));
  const auto v = lpq::section_in_lp(ThetaParams::from_interval_a2(a2), 7);
  EXPECT_TRUE(v.in_lp);
  EXPECT_EQ(v.method, "criterion");
}

TEST(SectionInLp, CriterionMatchesExactAndGridOracle) {
  // Rational grid in [2.6, 4.2] for n <= 12: the criterion and the exact
  // Sturm route must agree; a long double grid minimum confirms clear cases.
  int compared = 0;
  for (int n = 2; n <= 12; ++n) {
    for (int i = 0; i <= 16; ++i) {
      const Rational a2 = lpq::make_rational(26 + i, 10);
      const auto v = lpq::section_in_lp(ThetaParams::from_a2(a2), n);
      if (v.criterion && v.exact) {
        ++compared;
        EXPECT_EQ(*v.criterion, *v.exact) << "n=" << n << " A=" << a2.get_str();
      }
      const long double m = lpq::testing::alternating_grid_min(lpq::to_double(a2), n);
      if (n != 3 && std::fabs(static_cast<double>(m)) > 1e-6) {
        EXPECT_EQ(v.in_lp, m < 0) << "n=" << n << " A=" << a2.get_str();
      }
    }
  }
  EXPECT_GT(compared, 150);
}

TEST(ComputeCn, QuadraticIsFour) {
  const auto c = lpq::compute_cn(2, kTol);
  EXPECT_LE(c.lo, 4);
  EXPECT_GE(c.hi, 4);
  EXPECT_LE(c.hi - c.lo, kTol);
  EXPECT_EQ(c.method, "both");
  EXPECT_TRUE(c.agreement);
}

TEST(ComputeCn, CubicIsThree) {
  const auto c = lpq::compute_cn(3, kTol);
  EXPECT_LT(c.lo, 3);
  EXPECT_GE(c.hi, 3);
  EXPECT_TRUE(c.agreement);
}

TEST(ComputeCn, QuarticBetweenQinfAndFour) {
  // Dense-sampling bisection of the alternating criterion (long double) gives
  // c_4 = 3.2360679775 = 1 + sqrt(5).
  const auto c = lpq::compute_cn(4, kTol);
  EXPECT_NEAR(lpq::to_double(c.lo), 3.2360679775, 2e-9);
  EXPECT_GT(c.lo, Rational(323363667, 100000000));
  EXPECT_LT(c.hi, 4);
  EXPECT_TRUE(c.agreement);
}

TEST(ComputeCn, QuinticFrozenValue) {
  // Same dense-sampling oracle: c_5 = 3.23362046037.
  const auto c = lpq::compute_cn(5, kTol);
  EXPECT_NEAR(lpq::to_double(c.lo), 3.23362046037, 2e-9);
}

TEST(ComputeCn, SturmOnlyMatchesCriterion) {
  lpq::CnOptions opt;
  opt.sturm_only = true;
  const auto s = lpq::compute_cn(6, Rational(1, 1000000), opt);
  const auto c = lpq::compute_cn(6, Rational(1, 1000000), lpq::CnOptions{0, false});
  EXPECT_EQ(s.method, "sturm-bisection");
  EXPECT_EQ(c.method, "criterion-bisection");
  EXPECT_TRUE(s.lo <= c.hi && c.lo <= s.hi);
}

TEST(EstimateQinf, SmallNMaxBracketsC5C4) {
  const auto b = lpq::estimate_qinf(5, kTol);
  EXPECT_EQ(b.odd_n, 5);
  EXPECT_EQ(b.even_n, 4);
  EXPECT_GE(b.lo, 3);
  EXPECT_LE(b.hi, 4);
  EXPECT_THROW(lpq::estimate_qinf(4, kTol), lpq::InputError);
}

TEST(EstimateQinf, ContainsPrintedConstantAndRefinesMonotonically) {
  const auto b10 = lpq::estimate_qinf(10, kTol);
  const auto b20 = lpq::estimate_qinf(20, kTol);
  const auto b30 = lpq::estimate_qinf(30, kTol);
  // The printed 3.23363666 truncates q_inf: the bracket must meet [3.23363666, 3.23363667].
  EXPECT_LE(b20.lo, Rational(323363667, 100000000));
  EXPECT_GE(b20.hi, lpq::make_rational(323363666, 100000000));
  EXPECT_LE(b20.hi - b20.lo, Rational(1, 1000));
  EXPECT_GE(b30.lo, b10.lo);
  EXPECT_LE(b30.hi, b10.hi);
}

TEST(ThetaInLp, Examples) {
  EXPECT_TRUE(lpq::theta_in_lp(ThetaParams::from_a2(Rational(4))));
  EXPECT_FALSE(lpq::theta_in_lp(ThetaParams::from_a2(Rational(3))));
  EXPECT_FALSE(lpq::theta_in_lp(ThetaParams::from_a2(Rational(16, 5))));
  const auto& b = lpq::default_qinf_bracket();
  EXPECT_THROW(lpq::theta_in_lp(ThetaParams::from_a2((b.lo + b.hi) / 2)), lpq::InconclusiveError);
}

TEST(ThetaInLp, FullSeriesCriterionAgrees) {
  for (const Rational a2 : {Rational(3), Rational(16, 5), Rational(33, 10), Rational(4), Rational(5)}) {
    const auto p = ThetaParams::from_a2(a2);
    EXPECT_EQ(lpq::theta_in_lp_by_criterion(p).in_lp, lpq::theta_in_lp(p)) << a2.get_str();
  }
}
