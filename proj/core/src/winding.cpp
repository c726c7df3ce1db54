#include "lpq/winding.hpp"

#include <cmath>
#include <sstream>

#include "lpq/errors.hpp"

namespace lpq {
namespace {

struct Arc {
  Rational t0;
  Rational t1;
  bool far_half;
};

ComplexInterval to_interval(const CirclePoint& p, Precision prec) {
  return ComplexInterval::point(p.re, p.im, prec);
}

double mpfr_arg_increment(const ComplexInterval& from, const ComplexInterval& to, Precision prec) {
  // arg(to * conj(from)) from midpoints; certification bounds it by pi/2.
  ComplexInterval conj_from{from.re, -from.im};
  ComplexInterval q = to * conj_from;
  mpfr_t re;
  mpfr_t im;
  mpfr_t angle;
  mpfr_inits2(prec, re, im, angle, static_cast<mpfr_ptr>(nullptr));
  mpfr_add(re, q.re.lower(), q.re.upper(), MPFR_RNDN);
  mpfr_add(im, q.im.lower(), q.im.upper(), MPFR_RNDN);
  mpfr_atan2(angle, im, re, MPFR_RNDN);
  const double result = mpfr_get_d(angle, MPFR_RNDN);
  mpfr_clears(re, im, angle, static_cast<mpfr_ptr>(nullptr));
  return result;
}

}  // namespace

ComplexFunction ComplexFunction::from_polynomial(const RealPolynomial& p, Precision prec) {
  ComplexFunction f;
  f.coefficients.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    f.coefficients.push_back(Interval::point(c, prec));
  }
  f.tail = Interval(prec);
  return f;
}

ComplexInterval ComplexFunction::eval_polynomial(const ComplexInterval& z) const {
  const Precision prec = z.re.precision();
  ComplexInterval acc{Interval(prec), Interval(prec)};
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    acc *= z;
    acc.re += *it;
  }
  return acc;
}

Interval ComplexFunction::derivative_bound(const Interval& radius) const {
  Interval acc(radius.precision());
  for (std::size_t k = coefficients.size(); k-- > 1;) {
    acc = acc * radius + abs(coefficients[k]) * Interval::point(static_cast<long>(k), radius.precision());
  }
  return acc.magnitude();
}

CirclePoint circle_point(const Rational& t, const Rational& radius, bool far_half) {
  const Rational t2 = t * t;
  const Rational den = 1 + t2;
  CirclePoint p{radius * (1 - t2) / den, radius * 2 * t / den};
  if (far_half) {
    p.re = -p.re;
    p.im = -p.im;
  }
  return p;
}

double circle_angle(const Rational& t, bool far_half) {
  double theta = 2.0 * std::atan(to_double(t));
  if (far_half) {
    theta += M_PI;
  }
  if (theta < 0) {
    theta += 2.0 * M_PI;
  }
  return theta;
}

int winding_number(const ComplexFunction& f, const Rational& radius, const WindingOptions& options) {
  if (radius <= 0) {
    throw InputError("winding number needs a positive radius");
  }
  const Precision prec = options.precision;
  const Interval r = Interval::point(radius, prec);
  const Interval deriv = f.derivative_bound(r);
  const Interval half_pi = mul_2si(Interval::pi(prec), -1);
  const Interval sin_quarter = sqrt(Interval::point(2L, prec)) / Interval::point(2L, prec);

  std::vector<Arc> pending;
  const int per_half = std::max(1, options.initial_arcs / 2);
  for (bool far : {false, true}) {
    for (int i = 0; i < per_half; ++i) {
      pending.push_back({make_rational(2 * i - per_half, per_half), make_rational(2 * i + 2 - per_half, per_half), far});
    }
  }

  double total = 0.0;
  std::size_t arcs_used = pending.size();
  while (!pending.empty()) {
    Arc arc = pending.back();
    pending.pop_back();
    const ComplexInterval z0 = to_interval(circle_point(arc.t0, radius, arc.far_half), prec);
    const ComplexInterval z1 = to_interval(circle_point(arc.t1, radius, arc.far_half), prec);
    const Interval length = half_pi * (z1 - z0).modulus();
    const Interval spread = deriv * length + f.tail;
    const ComplexInterval v0 = f.eval_polynomial(z0);
    const ComplexInterval v1 = f.eval_polynomial(z1);
    // F(arc) and P(z1) lie in the disc of radius `spread` around v0. When
    // spread < |v0| sin(pi/4) that disc avoids 0 and sits inside a sector of
    // half-angle pi/4, so the increment arg v1 - arg v0 is the principal one.
    const bool ok = spread.certainly_less(v0.modulus() * sin_quarter);
    if (ok) {
      total += mpfr_arg_increment(v0, v1, prec);
      continue;
    }
    if (arcs_used >= options.max_arcs) {
      std::ostringstream os;
      os << "cannot certify nonvanishing on the arc theta in [" << circle_angle(arc.t0, arc.far_half) << ", "
         << circle_angle(arc.t1, arc.far_half) << "] of |z| = " << to_double(radius);
      throw InconclusiveError(os.str());
    }
    const Rational mid = (arc.t0 + arc.t1) / 2;
    pending.push_back({mid, arc.t1, arc.far_half});
    pending.push_back({arc.t0, mid, arc.far_half});
    ++arcs_used;
  }
  return static_cast<int>(std::lround(total / (2.0 * M_PI)));
}

}  // namespace lpq
