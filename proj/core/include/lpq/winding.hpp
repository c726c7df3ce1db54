#pragma once

#include <cstddef>
#include <vector>

#include "lpq/interval.hpp"
#include "lpq/polynomial.hpp"

namespace lpq {

/// F = P + R on a circle: P has real interval coefficients and |R| <= tail
/// everywhere on the circle the function is evaluated on.
struct ComplexFunction {
  std::vector<Interval> coefficients;
  Interval tail;

  static ComplexFunction from_polynomial(const RealPolynomial& p, Precision prec = kDefaultPrecision);

  [[nodiscard]] ComplexInterval eval_polynomial(const ComplexInterval& z) const;
  /// Upper bound of |P'| on the closed disk of the given radius.
  [[nodiscard]] Interval derivative_bound(const Interval& radius) const;
};

/// Exact rational point on the circle |z| = r:
/// r((1 - t^2)/(1 + t^2), 2t/(1 + t^2)), negated when `far_half`.
/// t in [-1, 1] sweeps theta over [-pi/2, pi/2] (or [pi/2, 3pi/2]).
struct CirclePoint {
  Rational re;
  Rational im;
};
CirclePoint circle_point(const Rational& t, const Rational& radius, bool far_half);
/// Approximate angle of the circle point in [0, 2pi), for diagnostics.
double circle_angle(const Rational& t, bool far_half);

struct WindingOptions {
  int initial_arcs = 64;
  std::size_t max_arcs = std::size_t{1} << 20;
  Precision precision = kDefaultPrecision;
};

/// Number of zeros of F in the open disk |z| < radius, via the argument
/// principle on a certified arc cover. Throws InconclusiveError naming the
/// arc when nonvanishing cannot be certified within max_arcs.
int winding_number(const ComplexFunction& f, const Rational& radius, const WindingOptions& options = {});

}  // namespace lpq
