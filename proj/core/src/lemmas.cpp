#include "lpq/lemmas.hpp"

#include <algorithm>

#include "lpq/errors.hpp"
#include "lpq/partial_theta.hpp"
#include "lpq/sturm.hpp"
#include "lpq/winding.hpp"

namespace lpq {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::in_lp:
      return "IN_LP";
    case Verdict::not_in_lp:
      return "NOT_IN_LP";
    case Verdict::inconclusive:
      break;
  }
  return "INCONCLUSIVE";
}

Verdict parse_verdict(const std::string& text) {
  if (text == "IN_LP") {
    return Verdict::in_lp;
  }
  if (text == "NOT_IN_LP") {
    return Verdict::not_in_lp;
  }
  if (text == "INCONCLUSIVE") {
    return Verdict::inconclusive;
  }
  throw InputError("unknown verdict '" + text + "'");
}

Q2FloorResult lemma_q2_floor(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3,
                             bool q_nondecreasing) {
  if (a0 <= 0 || a1 <= 0 || a2 <= 0 || a3 <= 0) {
    throw InputError("lemma_q2_floor needs positive a0..a3");
  }
  Q2FloorResult r;
  r.residual = a1 * a1 * a2 / (a0 * a0 * a0) + 3 * a1 * a3 / (a0 * a0) - 4 * a2 * a2 / (a0 * a0);
  r.power_sum = (a1 / a0) * (a1 / a0) - 2 * a2 / a0;
  if (a0 == a1) {
    const Rational q2 = a1 * a1 / (a0 * a2);
    const Rational q3 = a2 * a2 / (a1 * a3);
    r.reduced = q3 * (q2 - 4) + 3;
  }
  // The power-sum condition holds for every real-rooted alternating phi; the
  // Cauchy-Schwarz residual is used under the monotone hypothesis.
  if (r.power_sum < 0 || (q_nondecreasing && r.residual < 0)) {
    r.verdict = Verdict::not_in_lp;
  }
  return r;
}

// ---- positivity on [0, q2] ------------------------------------------------------

RealPolynomial theta_lower_section(const Rational& c, long n) {
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n + 1));
  Rational term = 1;
  for (long k = 0; k <= n; ++k) {
    coeffs.push_back(k % 2 == 0 ? term : Rational(-term));
    term /= pow(c, k);
  }
  return RealPolynomial(std::move(coeffs));
}

Interval phi_eval(const CoefficientSeries& normalized, const Rational& x, const Rational& tol) {
  if (x < 0) {
    throw InputError("phi_eval needs x >= 0");
  }
  const auto available = normalized.available_index();
  Rational sum = 0;
  Rational prev_term = 1;
  for (long k = 0;; ++k) {
    if (available && k > *available) {
      return Interval::point(sum, kDefaultPrecision);
    }
    const Rational term = normalized.coefficient(k) * pow(x, k);
    // Once terms decrease geometrically the alternating tail is below |term|.
    if (k >= 3 && term * 2 <= prev_term && term < tol) {
      const Interval centre = Interval::point(sum, kDefaultPrecision);
      return centre + Interval::bounds(-term, term, kDefaultPrecision);
    }
    sum += (k % 2 == 0) ? term : Rational(-term);
    prev_term = term;
    if (k > 100000) {
      throw PrecisionError("phi_eval: series does not settle");
    }
  }
}

namespace {

void require_normalized(const CoefficientSeries& s) {
  if (s.coefficient(0) != 1 || s.coefficient(1) != 1) {
    throw InputError("series must be normalized (a_0 = a_1 = 1)");
  }
}

Rational q_of(const CoefficientSeries& s, long n) {
  const Rational a = s.coefficient(n - 1);
  return a * a / (s.coefficient(n - 2) * s.coefficient(n));
}

struct SegmentCheck {
  int zeros = -1;
  int section_zeros = -1;
  Rational t_at_one;
  bool ok = false;
};

SegmentCheck check_segment(const CoefficientSeries& s, const Rational& c, const Rational& q2, long m) {
  const RealPolynomial t = theta_lower_section(c, 2 * m + 1);
  SegmentCheck r;
  r.t_at_one = t(Rational(1));
  r.zeros = sturm_count(t, Endpoint::at(Rational(1)), Endpoint::at(q2));
  if (r.zeros != 0 || r.t_at_one <= 0) {
    return r;
  }
  // S_{2m+1}(x, phi) > S-lower > 0 on (1, q2]; checked directly as well.
  const RealPolynomial section = s.section(2 * m + 1).reflected();
  r.section_zeros = sturm_count(section, Endpoint::at(Rational(1)), Endpoint::at(q2));
  r.ok = r.section_zeros == 0 && section(Rational(1)) > 0;
  return r;
}

}  // namespace

bool PositivityWitness::valid() const {
  if (m < 1 || zeros_in_segment != 0 || section_zeros_in_segment != 0 || t_at_one <= 0 || !term_domination || !remainder_positive) {
    return false;
  }
  return std::all_of(trace.begin(), trace.end(), [](const TracePoint& p) { return p.phi.certainly_positive(); });
}

PositivityWitness positivity_on_segment(const CoefficientSeries& normalized, const Rational& c,
                                        const PositivityOptions& options) {
  require_normalized(normalized);
  const Rational q2 = q_of(normalized, 2);
  const Rational q3 = q_of(normalized, 3);
  if (q2 < 2) {
    throw InputError("positivity_on_segment needs q_2 >= 2");
  }
  if (c < q2) {
    throw InputError("limit c is below q_2; quotients are not nondecreasing");
  }
  PositivityWitness w;
  w.c = c;
  w.q2 = q2;
  // Terms a_k x^k decrease for x <= 1 since p_k = q_2...q_k > 1.
  w.term_domination = q2 > 1;
  // On (1, q2] the ratio x / p_k <= q2 / p_k < 1 for k >= 3, so the remainder
  // after an odd index alternates with decreasing terms and starts positive.
  w.remainder_positive = q2 * q3 > 1;
  for (long m = 1; m <= options.m_cap; m *= 2) {
    const SegmentCheck s = check_segment(normalized, c, q2, m);
    if (s.ok) {
      w.m = m;
      w.zeros_in_segment = s.zeros;
      w.section_zeros_in_segment = s.section_zeros;
      w.t_at_one = s.t_at_one;
      break;
    }
  }
  if (w.m == 0) {
    throw InconclusiveError("no m <= " + std::to_string(options.m_cap) +
                            " gives a positive theta lower section on (1, q_2]; hypotheses likely violated");
  }
  w.theta_section_not_lp = !section_in_lp(ThetaParams::from_a2(c), static_cast<int>(2 * w.m + 1)).in_lp;
  const int n = std::max(2, options.trace_points);
  for (int i = 0; i < n; ++i) {
    const Rational x = q2 * i / (n - 1);
    w.trace.push_back({x, phi_eval(normalized, x, options.tol)});
  }
  return w;
}

bool check_positivity(const CoefficientSeries& normalized, const Rational& c, long m) {
  require_normalized(normalized);
  const Rational q2 = q_of(normalized, 2);
  return m >= 1 && q2 >= 2 && c >= q2 && check_segment(normalized, c, q2, m).ok;
}

// ---- circle bounds ---------------------------------------------------------------

RealPolynomial s4_polynomial(const Rational& q2, const Rational& q3, const Rational& q4) {
  return RealPolynomial({Rational(1), Rational(-1), 1 / q2, -1 / (q2 * q2 * q3), 1 / (q2 * q2 * q2 * q3 * q3 * q4)});
}

Rational circle_bound_value(const Rational& q2, const Rational& q3, const Rational& q4) { return q2 / (q3 * q3 * q4); }

Rational tail_bound_value(const Rational& q2, const Rational& q3, const Rational& q4) {
  return q2 / (q3 * q3 * q3 * q4 * q4 * q4 - q3 * q3);
}

Rational rouche_margin(const Rational& q2, const Rational& q3, const Rational& q4) {
  return circle_bound_value(q2, q3, q4) - tail_bound_value(q2, q3, q4);
}

namespace {

// |P(r e^{i theta})|^2 = sum_d w_d cos(d theta) as a polynomial in t = cos(theta).
RealPolynomial circle_norm_polynomial(const RealPolynomial& p, const Rational& r) {
  const int n = p.degree();
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = p.coefficient(k) * pow(r, k);
  }
  // Chebyshev T_0 .. T_n.
  std::vector<RealPolynomial> cheb{RealPolynomial({Rational(1)}), RealPolynomial({Rational(0), Rational(1)})};
  for (int d = 2; d <= n; ++d) {
    cheb.push_back(RealPolynomial({Rational(0), Rational(2)}) * cheb[static_cast<std::size_t>(d - 1)] -
                   cheb[static_cast<std::size_t>(d - 2)]);
  }
  RealPolynomial h;
  for (int d = 0; d <= n; ++d) {
    Rational w = 0;
    for (int k = 0; k + d <= n; ++k) {
      w += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(k + d)];
    }
    if (d > 0) {
      w *= 2;
    }
    h += cheb[static_cast<std::size_t>(d)] * w;
  }
  return h;
}

// p >= 0 on [lo, hi]: no odd-multiplicity zero strictly inside and p > 0 at
// some point of the interval.
bool nonnegative_on(const RealPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) {
    return true;
  }
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    if (mult % 2 == 1) {
      int inside = sturm_count(factor, Endpoint::at(lo), Endpoint::at(hi));
      if (factor(hi) == 0) {
        --inside;
      }
      if (inside > 0) {
        return false;
      }
    }
  }
  for (int i = 0; i <= 16; ++i) {
    const Rational x = lo + (hi - lo) * i / 16;
    if (const int s = p.sign_at(x); s != 0) {
      return s > 0;
    }
  }
  return false;
}

constexpr Precision kSamplePrecision = 160;

// Rational sample points covering both half circles.
std::vector<ComplexInterval> circle_samples(const Rational& r, int samples) {
  const int per_half = std::max(2, samples / 2);
  std::vector<ComplexInterval> pts;
  for (int half = 0; half < 2; ++half) {
    for (int j = 0; j < per_half; ++j) {
      const Rational t = -1 + Rational(2 * j, per_half);
      const CirclePoint p = circle_point(t, r, half == 1);
      pts.push_back(ComplexInterval::point(p.re, p.im, kSamplePrecision));
    }
  }
  return pts;
}

}  // namespace

CircleMin s4_circle_min(const Rational& q2, const Rational& q3, const Rational& q4, int samples) {
  if (q2 < 3 || q2 >= 4 || q3 < q2 || q4 < q3) {
    throw InputError("s4_circle_min needs 3 <= q2 < 4 and q2 <= q3 <= q4");
  }
  CircleMin out;
  out.bound = circle_bound_value(q2, q3, q4);
  const RealPolynomial p = s4_polynomial(q2, q3, q4);
  const RealPolynomial h = circle_norm_polynomial(p, q2);
  out.exact_certified = nonnegative_on(h - RealPolynomial({out.bound * out.bound}), Rational(-1), Rational(1));
  // Exact |P|^2 at rational circle points: the bound is attained at z = q2
  // when q2 = q3 = q4.
  const int per_half = std::max(2, samples / 2);
  bool first = true;
  for (int half = 0; half < 2; ++half) {
    for (int j = 0; j < per_half; ++j) {
      const CirclePoint z = circle_point(-1 + Rational(2 * j, per_half), q2, half == 1);
      Rational re = 0;
      Rational im = 0;
      for (int k = p.degree(); k >= 0; --k) {
        const Rational next_re = re * z.re - im * z.im + p.coefficient(k);
        im = re * z.im + im * z.re;
        re = next_re;
      }
      const Rational v = re * re + im * im;
      if (first || v < out.sampled_min_sq) {
        out.sampled_min_sq = v;
        first = false;
      }
      ++out.samples;
    }
  }
  return out;
}

TailBound tail_bound_r5(const std::vector<Rational>& q, int samples) {
  if (q.size() < 3) {
    throw InputError("tail_bound_r5 needs q2, q3, q4");
  }
  for (std::size_t i = 1; i < q.size(); ++i) {
    if (q[i] < q[i - 1]) {
      throw InputError("tail_bound_r5 needs nondecreasing quotients");
    }
  }
  const Rational& q2 = q[0];
  const Rational& q3 = q[1];
  const Rational& q4 = q[2];
  if (q3 * q4 * q4 * q4 <= 1) {
    throw InputError("tail_bound_r5 needs q3 q4^3 > 1");
  }
  TailBound out;
  out.bound = tail_bound_value(q2, q3, q4);

  // a_k = 1 / (p_2 ... p_k), p_k = q_2 ... q_k; coefficients of R_5 up to
  // the truncation index, then a geometric tail bound (ratio q2 / p_k <= 1/2).
  auto q_at = [&](long n) { return n - 2 < static_cast<long>(q.size()) ? q[static_cast<std::size_t>(n - 2)] : q.back(); };
  std::vector<Rational> coeffs(5, Rational(0));
  Rational a = 1;
  Rational p = 1;
  const Rational tiny(1, Integer("1" + std::string(45, '0')));
  Rational tail;
  for (long k = 2;; ++k) {
    p *= q_at(k);
    a /= p;
    const Rational term = a * pow(q2, k);
    if (k >= 5) {
      if (2 * q2 <= p * q_at(k + 1) && term < tiny) {
        tail = 2 * term;
        break;
      }
      coeffs.push_back(k % 2 == 0 ? a : Rational(-a));
    }
  }
  const RealPolynomial r5(std::move(coeffs));
  const Interval tail_iv = Interval::point(tail, kSamplePrecision);
  bool first = true;
  for (const ComplexInterval& z : circle_samples(q2, samples)) {
    const Interval upper = r5(z).modulus() + tail_iv;
    const Rational v = sqr(upper).upper_rational();
    if (first || v > out.sampled_max_sq) {
      out.sampled_max_sq = v;
      first = false;
    }
    ++out.samples;
  }
  return out;
}

// ---- Grace witness ----------------------------------------------------------------

Rational apolarity_residual(const RealPolynomial& p, const RealPolynomial& q) {
  if (p.degree() != 4 || q.degree() != 4) {
    throw InputError("apolarity residual needs two degree-4 polynomials");
  }
  static const int binom[5] = {1, 4, 6, 4, 1};
  Rational sum = 0;
  for (int k = 0; k <= 4; ++k) {
    const Rational ak = p.coefficient(k) / binom[k];
    const Rational bk = q.coefficient(4 - k) / binom[4 - k];
    sum += (k % 2 == 0 ? 1 : -1) * binom[k] * ak * bk;
  }
  return sum;
}

GraceWitness grace_apolar_witness(const Rational& q2, const Rational& q3, const Rational& q4) {
  if (q2 < 3) {
    throw InputError("grace witness needs q2 >= 3 (the zero -3(q2 - 4) leaves the disk)");
  }
  if (q3 <= 0 || q4 <= 0) {
    throw InputError("grace witness needs positive quotients");
  }
  GraceWitness g;
  g.q = RealPolynomial({Rational(0), Rational(0), -3 * q2 * (q2 - 4), 2 * (q2 - 6), Rational(1)});
  g.roots = {Rational(0), Rational(0), q2, -3 * (q2 - 4)};
  const RealPolynomial s4 = s4_polynomial(q2, q3, q4);
  g.residual = apolarity_residual(s4, g.q);
  g.roots_in_disk = std::all_of(g.roots.begin(), g.roots.end(),
                                [&](const Rational& z) { return g.q(z) == 0 && abs(z) <= q2; });
  g.inside_count = winding_number(ComplexFunction::from_polynomial(s4), q2);
  return g;
}

}  // namespace lpq
