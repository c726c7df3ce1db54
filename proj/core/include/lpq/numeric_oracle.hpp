#pragma once

#include <complex>
#include <limits>
#include <vector>

#include "lpq/polynomial.hpp"

namespace lpq {

/// Companion-matrix eigenvalue oracle. Not part of any certificate: it is an
/// independent numeric cross-check for the exact engine.
struct RootCensus {
  int degree = 0;
  int real_count = 0;
  int nonreal_count = 0;
  /// Nonreal pairs with modulus below the trust radius.
  int nonreal_pairs_inside = 0;
  std::vector<std::complex<double>> roots;
};

/// Double precision path, for moderate degree and coefficient range.
/// A root is real when |Im z| < sqrt(eps) (1 + |z|).
RootCensus oracle_census_double(const RealPolynomial& p,
                                double trust_radius = std::numeric_limits<double>::infinity());

/// MPFR path with `digits` decimal digits; a root is real when
/// |Im z| < 10^(-digits/4) (1 + |z|), which keeps roots of multiplicity up to 3 real.
RootCensus oracle_census(const RealPolynomial& p, int digits = 60,
                         double trust_radius = std::numeric_limits<double>::infinity());

/// Double path, escalated to the MPFR path when any root sits within a factor
/// 100 of the realness threshold.
RootCensus oracle_census_auto(const RealPolynomial& p);

}  // namespace lpq
