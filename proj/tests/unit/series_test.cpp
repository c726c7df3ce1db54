#include <gtest/gtest.h>

#include <random>

#include "lpq/errors.hpp"
#include "lpq/series.hpp"

using lpq::CoefficientSeries;
using lpq::QuotientRule;
using lpq::Rational;

namespace {

CoefficientSeries random_series(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(1, 50);
  std::vector<Rational> a;
  for (int k = 0; k <= n; ++k) {
    Rational v(d(rng), d(rng));
    v.canonicalize();
    a.push_back(v);
  }
  return CoefficientSeries::from_entries(a);
}

}  // namespace

TEST(LoadSeries, ParsesCoefficientFile) {
  const auto s = lpq::parse_coefficient_text("0 1\n1 1\n2 1/4\n");
  ASSERT_EQ(s.max_index(), 2);
  EXPECT_EQ(s.coefficient(2), Rational(1, 4));
}

TEST(LoadSeries, RuleMaterializes) {
  const auto s = lpq::load_series(R"({"type":"constant","q":4,"a0":1,"a1":1})");
  EXPECT_EQ(s.coefficient(3), Rational(1, 64));
}

TEST(LoadSeries, RejectsNonpositiveWithIndex) {
  try {
    lpq::parse_coefficient_text("0 1\n1 1\n2 \xE2\x88\x92" "1/4\n");
    FAIL() << "accepted a negative coefficient";
  } catch (const lpq::InputError& e) {
    EXPECT_NE(std::string(e.what()).find("a_2"), std::string::npos) << e.what();
  }
}

TEST(LoadSeries, RejectsMalformedLineWithLineNumber) {
  try {
    lpq::parse_coefficient_text("0 1\n# comment\n1 x\n");
    FAIL();
  } catch (const lpq::InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(LoadSeries, DecimalsInRulesAreExact) {
  const auto rule = lpq::parse_rule(R"({"type":"limit-increasing","c":3.2,"d":0.2})");
  EXPECT_EQ(rule.c, Rational(16, 5));
  EXPECT_EQ(rule.d, Rational(1, 5));
  EXPECT_EQ(rule.q_at(2), Rational(31, 10));
}

TEST(LoadSeries, RuleValidation) {
  EXPECT_THROW(lpq::parse_rule(R"({"type":"limit-increasing","c":1,"d":4})"), lpq::InputError);
  EXPECT_THROW(lpq::parse_rule(R"({"type":"list","q":[]})"), lpq::InputError);
  EXPECT_THROW(lpq::parse_rule(R"({"type":"bogus"})"), lpq::InputError);
  EXPECT_THROW(lpq::parse_rule(R"({"type":"constant","q":-1})"), lpq::InputError);
}

TEST(Quotients, ThetaCoefficientsGiveConstantFour) {
  std::vector<Rational> a;
  for (long k = 0; k <= 12; ++k) {
    a.push_back(lpq::pow(Rational(2), -k * k));
  }
  const auto prof = lpq::quotients(CoefficientSeries::from_entries(a), 12);
  for (const auto& q : prof.q) {
    EXPECT_EQ(q, 4);
  }
  EXPECT_EQ(prof.monotone, lpq::QuotientProfile::Monotone::increasing);
  EXPECT_FALSE(prof.strict);
}

TEST(Quotients, Factorials) {
  std::vector<Rational> a;
  Rational f = 1;
  for (int k = 0; k <= 10; ++k) {
    a.push_back(1 / f);
    f *= k + 1;
  }
  const auto prof = lpq::quotients(CoefficientSeries::from_entries(a), 10);
  for (long n = 2; n <= 10; ++n) {
    EXPECT_EQ(prof.q_at(n), Rational(n, n - 1));
  }
  EXPECT_EQ(prof.monotone, lpq::QuotientProfile::Monotone::decreasing);
  EXPECT_TRUE(prof.strict);
}

TEST(Quotients, AllOnes) {
  const auto prof = lpq::quotients(CoefficientSeries::from_entries(std::vector<Rational>(6, Rational(1))), 5);
  for (long n = 1; n <= 5; ++n) {
    EXPECT_EQ(prof.p_at(n), 1);
  }
  for (long n = 2; n <= 5; ++n) {
    EXPECT_EQ(prof.q_at(n), 1);
  }
}

TEST(Quotients, RejectsSmallNMax) {
  EXPECT_THROW(lpq::quotients(CoefficientSeries::from_entries({1, 1, 1}), 1), lpq::InputError);
}

TEST(Quotients, RuleLimitAndMonotonicity) {
  const auto s = CoefficientSeries::from_rule(QuotientRule::limit_increasing(Rational(16, 5), Rational(1, 5)));
  const auto prof = lpq::quotients(s, 10);
  EXPECT_TRUE(prof.analytic);
  EXPECT_TRUE(prof.strict);
  EXPECT_EQ(prof.monotone, lpq::QuotientProfile::Monotone::increasing);
  ASSERT_TRUE(prof.limit);
  EXPECT_EQ(prof.limit->value, Rational(16, 5));
}

TEST(Quotients, FiniteLimitIsLastTermWithLastIncrement) {
  const auto s = lpq::coeffs_from_quotients({Rational(3), Rational(7, 2), Rational(15, 4)}, 1, 1);
  const auto prof = lpq::quotients(s, 4);
  ASSERT_TRUE(prof.limit);
  EXPECT_FALSE(prof.limit->analytic);
  EXPECT_EQ(prof.limit->value, Rational(15, 4));
  EXPECT_EQ(prof.limit->error, Rational(1, 4));
}

TEST(CoeffsFromQuotients, ConstantFour) {
  const auto s = lpq::coeffs_from_quotients(std::vector<Rational>(9, Rational(4)), 1, 1);
  for (long k = 0; k <= 10; ++k) {
    EXPECT_EQ(s.coefficient(k), lpq::pow(Rational(4), -k * (k - 1) / 2));
  }
}

TEST(CoeffsFromQuotients, ThreeFour) {
  const auto s = lpq::coeffs_from_quotients({Rational(3), Rational(4)}, 1, 1);
  EXPECT_EQ(s.coefficient(2), Rational(1, 3));
  EXPECT_EQ(s.coefficient(3), Rational(1, 36));
}

TEST(CoeffsFromQuotients, Ones) {
  const auto s = lpq::coeffs_from_quotients(std::vector<Rational>(5, Rational(1)), 1, 1);
  for (long k = 0; k <= 6; ++k) {
    EXPECT_EQ(s.coefficient(k), 1);
  }
  EXPECT_THROW(lpq::coeffs_from_quotients({}, 1, 1), lpq::InputError);
}

TEST(Normalize, Example) {
  const auto b = lpq::normalize(CoefficientSeries::from_entries({4, 2, 1}));
  EXPECT_EQ(b.coefficient(0), 1);
  EXPECT_EQ(b.coefficient(1), 1);
  EXPECT_EQ(b.coefficient(2), 1);
}

TEST(Normalize, IdempotentOnNormalized) {
  const auto s = CoefficientSeries::from_entries({1, 1, Rational(1, 3), Rational(1, 36)});
  EXPECT_EQ(lpq::normalize(s).entries(), s.entries());
}

TEST(SeriesProperties, RoundTripAndQuotientInvariance) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 100; ++i) {
    const auto s = random_series(rng, 10);
    const auto prof = lpq::quotients(s, 10);
    const auto norm = lpq::normalize(s);
    EXPECT_EQ(lpq::quotients(norm, 10).q, prof.q);
    const auto back = lpq::coeffs_from_quotients(prof.q, 1, 1);
    EXPECT_EQ(back.prefix(10), norm.prefix(10));
  }
}

TEST(SeriesProperties, GeneratorMatchesProductOfP) {
  const auto s = CoefficientSeries::from_rule(QuotientRule::limit_increasing(Rational(16, 5), Rational(1, 5)), 15);
  const auto prof = lpq::quotients(s, 15);
  Rational prod = 1;
  for (long n = 1; n <= 15; ++n) {
    prod *= prof.p_at(n);
    EXPECT_EQ(s.coefficient(n), s.coefficient(0) / prod);
  }
}
