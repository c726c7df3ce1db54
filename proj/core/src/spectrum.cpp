#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "lpq/errors.hpp"
#include "lpq/numeric_oracle.hpp"
#include "lpq/partial_theta.hpp"

namespace lpq {
namespace {

// G(A, s) = sum_j (-1)^j s^j A^(-j(j-1)/2) = g_a(-a s). A double zero of g_a
// at x = -a s is a common zero of G and dG/ds.

// ---- long double scan -------------------------------------------------------

struct LdValues {
  long double g;
  long double gs;
};

LdValues eval_ld(long double a2, long double s) {
  long double g = 0;
  long double gs = 0;
  long double term = 1;      // s^j A^-e_j
  long double inv_pow = 1;   // A^-j
  const long double inv = 1 / a2;
  for (int j = 0; j < 400; ++j) {
    const long double sign = (j % 2 == 0) ? 1 : -1;
    g += sign * term;
    if (j > 0) {
      gs += sign * j * term / s;
    }
    term *= s * inv_pow;
    inv_pow *= inv;
    if (j > 4 && term < 1e-30L) {
      break;
    }
  }
  return {g, gs};
}

struct FirstMin {
  bool found = false;
  long double s = 0;
  long double value = 0;
};

// First s > 0 where dG/ds turns from negative to positive.
FirstMin first_local_min(long double a2) {
  FirstMin out;
  long double prev_s = 0.25L;
  long double prev = eval_ld(a2, prev_s).gs;
  for (long double s = prev_s * 1.002L; s < 1e6L; s *= 1.002L) {
    const long double d = eval_ld(a2, s).gs;
    if (prev < 0 && d >= 0) {
      long double lo = prev_s;
      long double hi = s;
      for (int i = 0; i < 80; ++i) {
        const long double mid = (lo + hi) / 2;
        (eval_ld(a2, mid).gs < 0 ? lo : hi) = mid;
      }
      out.found = true;
      out.s = (lo + hi) / 2;
      out.value = eval_ld(a2, out.s).g;
      return out;
    }
    prev = d;
    prev_s = s;
  }
  return out;
}

struct Seed {
  long double a2;
  long double s;
};

// Spectrum points are the A where the first local minimum value crosses 0,
// negative above and positive below, along a continuous branch.
std::vector<Seed> scan_seeds(int k_max) {
  std::vector<Seed> seeds;
  const long double step = 0.0025L;
  FirstMin prev = first_local_min(4.0L);
  long double prev_a2 = 4.0L;
  for (long double a2 = 4.0L - step; a2 > 1.02L && static_cast<int>(seeds.size()) < k_max; a2 -= step) {
    const FirstMin cur = first_local_min(a2);
    const bool continuous = prev.found && cur.found && std::fabs(cur.s - prev.s) < 0.05L * prev.s;
    if (continuous && prev.value < 0 && cur.value > 0) {
      long double lo = a2;
      long double hi = prev_a2;
      for (int i = 0; i < 60; ++i) {
        const long double mid = (lo + hi) / 2;
        (first_local_min(mid).value > 0 ? lo : hi) = mid;
      }
      const long double a = (lo + hi) / 2;
      seeds.push_back({a, first_local_min(a).s});
    }
    prev = cur;
    prev_a2 = a2;
  }
  if (static_cast<int>(seeds.size()) < k_max) {
    throw InconclusiveError("spectrum scan found only " + std::to_string(seeds.size()) + " points above a^2 = 1.02");
  }
  return seeds;
}

// ---- certified system ---------------------------------------------------------

struct SystemValues {
  Interval g;
  Interval gs;
  Interval gss;
  Interval ga;
  Interval gsa;
};

// Enclosures of G and the needed partial derivatives over a box (A, s) with
// A > 1 and s >= 0, including the truncation tail.
SystemValues eval_system(const Interval& a2, const Interval& s) {
  const Precision prec = std::max(a2.precision(), s.precision());
  const Interval inv = Interval::point(1L, prec) / a2;
  const Interval s_hi = Interval::point(s.upper_rational(), prec);
  const Interval a_lo = Interval::point(a2.lower_rational(), prec);
  const Interval inv_lo = Interval::point(1L, prec) / a_lo;
  const Interval half = Interval::point(Rational(1, 2), prec);
  const Interval nine = Interval::point(9L, prec);
  const Interval tiny = mul_2si(Interval::point(1L, prec), -static_cast<long>(prec + 32));

  // Horner over coefficient lists, built from the largest index down.
  std::vector<Interval> c;    // (-1)^j A^-e_j
  std::vector<Interval> ca;   // d/dA
  Interval coef = Interval::point(1L, prec);
  Interval inv_pow = Interval::point(1L, prec);     // A^-j
  Interval inv_pow_lo = Interval::point(1L, prec);  // A_lo^-j
  Interval mag_lo = Interval::point(1L, prec);      // A_lo^-e_j
  Interval tail(prec);
  for (long j = 0;; ++j) {
    if (j >= 3) {
      // All five series have term ratios at most 9 S A_lo^-j for indices >= j.
      const Interval ratio = nine * s_hi * inv_pow_lo;
      const Interval jj = Interval::point(j, prec);
      const Interval e = Interval::point(j * (j - 1) / 2 + 1, prec);
      const Interval first = jj * jj * e * pow(s_hi + Interval::point(1L, prec), static_cast<unsigned long>(j)) *
                             mag_lo * (Interval::point(1L, prec) + inv_lo);
      if (ratio.certainly_less(half) && first.certainly_less(tiny)) {
        tail = Interval::symmetric(mul_2si(first, 1));
        break;
      }
    }
    c.push_back(coef);
    const long e = j * (j - 1) / 2;
    ca.push_back(-(coef * Interval::point(e, prec) * inv));
    coef = -(coef * inv_pow);
    inv_pow *= inv;
    mag_lo *= inv_pow_lo;
    inv_pow_lo *= inv_lo;
    if (j > 100000) {
      throw PrecisionError("theta system truncation did not settle");
    }
  }

  SystemValues v{Interval(prec), Interval(prec), Interval(prec), Interval(prec), Interval(prec)};
  for (std::size_t j = c.size(); j-- > 0;) {
    const Interval jj = Interval::point(static_cast<long>(j), prec);
    const Interval jm = Interval::point(static_cast<long>(j) - 1, prec);
    v.g = v.g * s + c[j];
    v.ga = v.ga * s + ca[j];
    if (j >= 1) {
      v.gs = v.gs * s + c[j] * jj;
      v.gsa = v.gsa * s + ca[j] * jj;
    }
    if (j >= 2) {
      v.gss = v.gss * s + c[j] * jj * jm;
    }
  }
  v.g += tail;
  v.gs += tail;
  v.gss += tail;
  v.ga += tail;
  v.gsa += tail;
  return v;
}

Interval point_of(const Interval& x) { return Interval::point(x.mid_rational(), x.precision()); }

struct Certified {
  Interval a2;
  Interval s;
};

// Newton on (G, G_s) = 0 followed by a Krawczyk inclusion test.
Certified certify_point(const Seed& seed, const Rational& tol, Precision prec) {
  Rational a2 = parse_rational(std::to_string(static_cast<double>(seed.a2)));
  Rational s = parse_rational(std::to_string(static_cast<double>(seed.s)));
  // Round iterates to a dyadic grid finer than the precision to keep rationals small.
  auto round_dyadic = [prec](const Interval& x) {
    const Rational m = x.mid_rational();
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(prec));
    const Integer n = floor(Rational(m * scale));
    return make_rational(n, scale);
  };
  for (int it = 0; it < 200; ++it) {
    const SystemValues v = eval_system(Interval::point(a2, prec), Interval::point(s, prec));
    // J = [[G_A, G_s], [G_sA, G_ss]]
    const Interval det = v.ga * v.gss - v.gs * v.gsa;
    if (det.contains_zero()) {
      throw InconclusiveError("singular Jacobian in the spectrum Newton iteration");
    }
    const Interval da = (v.gss * v.g - v.gs * v.gs) / det;
    const Interval ds = (v.ga * v.gs - v.gsa * v.g) / det;
    const Rational a2_next = round_dyadic(Interval::point(a2, prec) - da);
    const Rational s_next = round_dyadic(Interval::point(s, prec) - ds);
    const bool settled = a2_next == a2 && s_next == s;
    a2 = a2_next;
    s = s_next;
    if (settled || (abs(da).upper_double() < std::ldexp(1.0, -static_cast<int>(prec) + 8) &&
                    abs(ds).upper_double() < std::ldexp(1.0, -static_cast<int>(prec) + 8))) {
      break;
    }
  }

  const Interval x_a = Interval::point(a2, prec);
  const Interval x_s = Interval::point(s, prec);
  const SystemValues mid = eval_system(x_a, x_s);
  // Preconditioner Y = inverse Jacobian at the midpoint (midpoint values).
  const Interval det = point_of(mid.ga * mid.gss - mid.gs * mid.gsa);
  const Interval y11 = point_of(mid.gss) / det;
  const Interval y12 = -point_of(mid.gs) / det;
  const Interval y21 = -point_of(mid.gsa) / det;
  const Interval y22 = point_of(mid.ga) / det;

  for (Rational r = tol / 8; r > tol / (Rational(1) << 60); r /= 16) {
    const Interval ra = Interval::bounds(-r, r, prec);
    const Interval rs = ra;
    const Interval box_a = x_a + ra;
    const Interval box_s = x_s + rs;
    const SystemValues j = eval_system(box_a, box_s);
    // K = x - Y F(x) + (I - Y J(X)) (X - x)
    const Interval f1 = mid.g;
    const Interval f2 = mid.gs;
    const Interval m11 = Interval::point(1L, prec) - (y11 * j.ga + y12 * j.gsa);
    const Interval m12 = -(y11 * j.gs + y12 * j.gss);
    const Interval m21 = -(y21 * j.ga + y22 * j.gsa);
    const Interval m22 = Interval::point(1L, prec) - (y21 * j.gs + y22 * j.gss);
    const Interval k_a = x_a - (y11 * f1 + y12 * f2) + m11 * ra + m12 * rs;
    const Interval k_s = x_s - (y21 * f1 + y22 * f2) + m21 * ra + m22 * rs;
    const bool inside = mpfr_greater_p(k_a.lower(), box_a.lower()) && mpfr_less_p(k_a.upper(), box_a.upper()) &&
                        mpfr_greater_p(k_s.lower(), box_s.lower()) && mpfr_less_p(k_s.upper(), box_s.upper());
    if (inside) {
      return {k_a, k_s};
    }
  }
  throw InconclusiveError("Krawczyk test failed near a^2 = " + std::to_string(static_cast<double>(seed.a2)));
}

// Positivity of f over [lo, hi] x A-box by recursive bisection.
template <class F>
bool certify_cover(const F& positive_on, const Rational& lo, const Rational& hi, int depth) {
  if (positive_on(lo, hi)) {
    return true;
  }
  if (depth == 0) {
    return false;
  }
  const Rational mid = (lo + hi) / 2;
  return certify_cover(positive_on, lo, mid, depth - 1) && certify_cover(positive_on, mid, hi, depth - 1);
}

// G > 0 on [0, s*) for every A in the box: G'' > 0 on [s_m, s_hi] and G > 0
// on [0, s_m] (mean-value enclosures). G'' > 0 also gives multiplicity 2.
bool verify_rightmost(const Certified& c, Precision prec) {
  const Rational s_lo = c.s.lower_rational();
  const Rational s_hi = c.s.upper_rational();
  auto convex_on = [&](const Rational& a, const Rational& b) {
    return eval_system(c.a2, Interval::bounds(a, b, prec)).gss.certainly_positive();
  };
  auto positive_on = [&](const Rational& a, const Rational& b) {
    const Rational m = (a + b) / 2;
    const SystemValues at_mid = eval_system(c.a2, Interval::point(m, prec));
    const SystemValues over = eval_system(c.a2, Interval::bounds(a, b, prec));
    const Interval mean_value = at_mid.g + over.gs * Interval::bounds(a - m, b - m, prec);
    return mean_value.certainly_positive() || over.g.certainly_positive();
  };
  for (Rational delta = s_lo / 4; delta > s_lo / 1024; delta /= 2) {
    const Rational s_m = s_lo - delta;
    if (certify_cover(convex_on, s_m, s_hi, 8) && certify_cover(positive_on, Rational(0), s_m, 16)) {
      return true;
    }
  }
  return false;
}

int pairs_between(const SpectrumPoint& upper, const SpectrumPoint& lower) {
  // a midway between the two points; A rounded to a nearby rational.
  const double a = (upper.a_tilde.mid_double() + lower.a_tilde.mid_double()) / 2;
  const Rational a2 = parse_rational(std::to_string(a * a));
  const int degree = 40;
  // Scaled section S(a w): zeros w = z / a; trust disk |z| < a^J.
  const double trust = std::pow(a, degree - 1);
  return oracle_census(scaled_section(a2, degree), 60, trust).nonreal_pairs_inside;
}

}  // namespace

std::vector<SpectrumPoint> spectrum(int k_max, const Rational& tol, int jobs) {
  if (k_max < 1) {
    throw InputError("spectrum needs k_max >= 1");
  }
  if (tol <= 0) {
    throw InputError("tolerance must be positive");
  }
  const double t = to_double(tol);
  const Precision prec = std::max<Precision>(kDefaultPrecision, static_cast<Precision>(96 + 2 * std::max(0.0, -std::log2(t))));
  const std::vector<Seed> seeds = scan_seeds(k_max);

  auto solve = [&](int k) {
    const Certified c = certify_point(seeds[static_cast<std::size_t>(k - 1)], tol, prec);
    SpectrumPoint p;
    p.k = k;
    p.a2_tilde = c.a2;
    p.a_tilde = sqrt(c.a2);
    p.s = c.s;
    p.double_root = -(p.a_tilde * c.s);
    p.rightmost_verified = verify_rightmost(c, prec);
    p.multiplicity_two = p.rightmost_verified || eval_system(c.a2, c.s).gss.certainly_positive();
    if (!p.rightmost_verified) {
      throw InconclusiveError("could not certify the double zero for k = " + std::to_string(k) +
                              " as the rightmost real zero");
    }
    return p;
  };

  std::vector<SpectrumPoint> points;
  if (jobs > 1) {
    std::vector<std::future<SpectrumPoint>> futures;
    for (int k = 1; k <= k_max; ++k) {
      futures.push_back(std::async(std::launch::async, solve, k));
    }
    for (auto& f : futures) {
      points.push_back(f.get());
    }
  } else {
    for (int k = 1; k <= k_max; ++k) {
      points.push_back(solve(k));
    }
  }
  for (int k = 1; k < k_max; ++k) {
    points[static_cast<std::size_t>(k - 1)].pairs_between =
        pairs_between(points[static_cast<std::size_t>(k - 1)], points[static_cast<std::size_t>(k)]);
  }
  return points;
}

}  // namespace lpq
