#include <gtest/gtest.h>

#include <random>

#include "lpq/errors.hpp"
#include "lpq/numeric_oracle.hpp"
#include "lpq/sturm.hpp"
#include "oracles.hpp"

using lpq::Endpoint;
using lpq::Rational;
using lpq::RealPolynomial;

namespace {

RealPolynomial poly(std::initializer_list<Rational> c) { return RealPolynomial(std::vector<Rational>(c)); }

}  // namespace

TEST(SturmCount, NoRealRoots) {
  EXPECT_EQ(lpq::sturm_count(poly({1, 0, 1}), Endpoint::neg_inf(), Endpoint::pos_inf()), 0);
}

TEST(SturmCount, ThreeConstructedRoots) {
  const RealPolynomial p = RealPolynomial::from_roots({Rational(-1), Rational(-2), Rational(-3)});
  EXPECT_EQ(lpq::sturm_count(p, Endpoint::at(Rational(-4)), Endpoint::at(Rational(0))), 3);
}

TEST(SturmCount, DoubleRootCountedOnce) {
  EXPECT_EQ(lpq::sturm_count(poly({1, -1, Rational(1, 4)}), Endpoint::at(Rational(0)), Endpoint::at(Rational(4))), 1);
}

TEST(SturmCount, HalfOpenConvention) {
  const RealPolynomial p = RealPolynomial::from_roots({Rational(1), Rational(2)});
  EXPECT_EQ(lpq::sturm_count(p, Endpoint::at(Rational(1)), Endpoint::at(Rational(2))), 1);
  EXPECT_EQ(lpq::sturm_count(p, Endpoint::at(Rational(0)), Endpoint::at(Rational(1))), 1);
  EXPECT_EQ(lpq::sturm_count(p, Endpoint::at(Rational(2)), Endpoint::pos_inf()), 0);
}

TEST(SturmCount, ZeroPolynomialRejected) {
  EXPECT_THROW(lpq::sturm_count(RealPolynomial(), Endpoint::neg_inf(), Endpoint::pos_inf()), lpq::InputError);
}

TEST(Hyperbolicity, PerfectSquareBoundary) {
  const auto r = lpq::hyperbolicity_report(poly({1, 1, Rational(1, 4)}));
  EXPECT_EQ(r.real_root_count, 2);
  EXPECT_EQ(r.z_c, 0);
  EXPECT_FALSE(r.all_simple);
  ASSERT_EQ(r.brackets.size(), 1U);
  EXPECT_EQ(r.brackets[0].multiplicity, 2);
  EXPECT_EQ(r.brackets[0].lo, Rational(-2));
  EXPECT_EQ(r.brackets[0].hi, Rational(-2));
  EXPECT_TRUE(r.all_negative);
}

TEST(Hyperbolicity, NegativeDiscriminantQuadratic) {
  const auto r = lpq::hyperbolicity_report(poly({1, 1, Rational(10, 39)}));
  EXPECT_EQ(r.z_c, 2);
  EXPECT_EQ(r.real_root_count, 0);
  EXPECT_FALSE(r.all_negative);
}

TEST(Hyperbolicity, ZeroRootIsNonpositiveNotNegative) {
  const auto r = lpq::hyperbolicity_report(RealPolynomial::from_roots({Rational(0), Rational(-1)}));
  EXPECT_TRUE(r.all_nonpositive);
  EXPECT_FALSE(r.all_negative);
}

TEST(Hyperbolicity, BracketsIsolateAndAreDisjoint) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const RealPolynomial p = lpq::testing::random_polynomial(rng, 9);
    const auto r = lpq::hyperbolicity_report(p);
    EXPECT_EQ(r.real_root_count + r.z_c, r.degree);
    EXPECT_EQ(r.z_c % 2, 0);
    for (std::size_t k = 0; k < r.brackets.size(); ++k) {
      const auto& b = r.brackets[k];
      if (b.lo == b.hi) {
        EXPECT_EQ(p(b.hi), 0);
      } else {
        EXPECT_EQ(lpq::sturm_count(p, Endpoint::at(b.lo), Endpoint::at(b.hi)), 1);
      }
      if (k > 0) {
        EXPECT_LE(r.brackets[k - 1].hi, b.lo);
      }
    }
  }
}

TEST(Hyperbolicity, CubicAgreesWithDiscriminant) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const RealPolynomial p = lpq::testing::random_polynomial(rng, 2 + i % 2);
    EXPECT_EQ(lpq::hyperbolicity_report(p).z_c, lpq::testing::discriminant_z_c(p)) << lpq::to_string(p);
  }
}

TEST(Hyperbolicity, AgreesWithCompanionOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> deg(1, 12);
  for (int i = 0; i < 200; ++i) {
    const RealPolynomial p = lpq::testing::random_polynomial(rng, deg(rng));
    const auto census = lpq::oracle_census_auto(p);
    EXPECT_EQ(lpq::real_root_count(p), census.real_count) << lpq::to_string(p);
  }
}

TEST(Czds, FactorialSequenceOnBinomial) {
  std::vector<Rational> gamma;
  Rational f = 1;
  for (int k = 0; k <= 6; ++k) {
    gamma.push_back(1 / f);
    f *= k + 1;
  }
  const RealPolynomial p = RealPolynomial::from_roots(std::vector<Rational>(6, Rational(-1)));
  const auto r = lpq::czds_check(gamma, p);
  EXPECT_EQ(r.z_c_before, 0);
  EXPECT_EQ(r.z_c_after, 0);
  EXPECT_TRUE(r.satisfied);
}

TEST(Czds, IdentitySequence) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const RealPolynomial p = lpq::testing::random_polynomial(rng, 6);
    const auto r = lpq::czds_check(std::vector<Rational>(7, Rational(1)), p);
    EXPECT_EQ(r.z_c_before, r.z_c_after);
    EXPECT_TRUE(r.satisfied);
  }
}

TEST(Czds, ThetaSequenceKeepsHyperbolicInputsReal) {
  std::mt19937_64 rng(29);
  std::vector<Rational> gamma;
  for (long k = 0; k <= 10; ++k) {
    gamma.push_back(lpq::pow(Rational(2), -k * k));
  }
  for (int i = 0; i < 30; ++i) {
    const RealPolynomial p = lpq::testing::random_hyperbolic(rng, 1 + i % 10);
    EXPECT_TRUE(lpq::czds_check(gamma, p).satisfied);
  }
}

TEST(Czds, ShortSequenceRejected) {
  EXPECT_THROW(lpq::czds_check({Rational(1)}, poly({1, 1})), lpq::InputError);
}
