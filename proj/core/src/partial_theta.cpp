#include "lpq/partial_theta.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <queue>
#include <sstream>

#include "lpq/errors.hpp"
#include "lpq/sturm.hpp"

namespace lpq {
namespace {

Precision precision_for(const Rational& tol) {
  // 64 guard bits plus twice the tolerance exponent.
  const double t = to_double(tol);
  const double bits = t > 0 ? -std::log2(t) : 64.0;
  return std::max<Precision>(kDefaultPrecision, static_cast<Precision>(64 + 2 * std::max(0.0, bits)));
}

Interval one(Precision prec) { return Interval::point(1L, prec); }

bool exact_real_rooted(const Rational& a2, int n) { return real_root_count(scaled_section(a2, n)) == n; }

}  // namespace

ThetaParams ThetaParams::from_a2(const Rational& a2, Precision prec) {
  if (a2 <= 1) {
    throw InputError("partial theta needs a > 1");
  }
  ThetaParams p;
  p.a2 = Interval::point(a2, prec);
  p.a = sqrt(p.a2);
  p.a2_exact = a2;
  if (Rational root; exact_sqrt(a2, root)) {
    p.a_exact = root;
    p.a = Interval::point(root, prec);
  }
  return p;
}

ThetaParams ThetaParams::from_a(const Rational& a, Precision prec) {
  if (a <= 1) {
    throw InputError("partial theta needs a > 1");
  }
  ThetaParams p = from_a2(a * a, prec);
  p.a_exact = a;
  p.a = Interval::point(a, prec);
  return p;
}

ThetaParams ThetaParams::from_interval_a2(const Interval& a2) {
  if (mpfr_cmp_ui(a2.lower(), 1) <= 0) {
    throw InputError("partial theta needs a > 1");
  }
  ThetaParams p;
  p.a2 = a2;
  p.a = sqrt(a2);
  return p;
}

ThetaParams ThetaParams::with_precision(Precision prec) const {
  if (a2_exact) {
    ThetaParams p = a_exact ? from_a(*a_exact, prec) : from_a2(*a2_exact, prec);
    return p;
  }
  ThetaParams p;
  p.a2 = a2.with_precision(prec);
  p.a = a.with_precision(prec);
  return p;
}

Interval theta_eval(const ThetaParams& params, const Rational& x, const Rational& tol) {
  if (tol <= 0) {
    throw InputError("tolerance must be positive");
  }
  const Interval half = Interval::point(Rational(1, 2), kDefaultPrecision);
  for (Precision prec = std::max(params.a.precision(), precision_for(tol)); prec <= kPrecisionCap; prec *= 2) {
    const ThetaParams p = params.with_precision(prec);
    const Interval xi = Interval::point(x, prec);
    const Interval abs_x = abs(xi);
    const Interval inv_a = one(prec) / p.a;
    const Interval inv_a2 = one(prec) / p.a2;
    const Interval quarter_tol = Interval::point(tol / 4, prec);

    Interval sum = one(prec);
    Interval term = one(prec);
    Interval factor = inv_a;  // a^-(2j+1) for the step j -> j+1
    for (long j = 0;; ++j) {
      term *= xi * factor;
      factor *= inv_a2;
      // term = t_{j+1}; ratios |t_{i+1}/t_i| = |x| a^-(2i+1) <= |x| a^-(2j+3) for i > j.
      const Interval ratio = abs_x * factor;
      const Interval tail = mul_2si(abs(term), 1);
      if (ratio.certainly_less(half) && tail.certainly_less(quarter_tol)) {
        Interval result = sum + Interval::symmetric(tail);
        if (result.width().certainly_less_equal(Interval::point(tol, prec))) {
          return result;
        }
        break;
      }
      sum += term;
      if (j > 1000000) {
        throw PrecisionError("partial theta series did not settle");
      }
    }
  }
  throw PrecisionError("theta_eval: tolerance not reached at the precision cap");
}

std::optional<RealPolynomial> exact_section(const ThetaParams& params, int n) {
  if (!params.a_exact) {
    return std::nullopt;
  }
  if (n < 0) {
    throw InputError("section degree must be nonnegative");
  }
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  for (long j = 0; j <= n; ++j) {
    c.push_back(pow(*params.a_exact, -j * j));
  }
  return RealPolynomial(std::move(c));
}

std::vector<Interval> section_coefficients(const ThetaParams& params, int n) {
  const Precision prec = params.a.precision();
  std::vector<Interval> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  Interval term = one(prec);
  const Interval inv_a = one(prec) / params.a;
  const Interval inv_a2 = one(prec) / params.a2;
  Interval factor = inv_a;
  for (int j = 0; j <= n; ++j) {
    c.push_back(term);
    term *= factor;  // a^-(j+1)^2 = a^-j^2 a^-(2j+1)
    factor *= inv_a2;
  }
  return c;
}

RealPolynomial scaled_section(const Rational& a2, int n) {
  if (n < 0) {
    throw InputError("section degree must be nonnegative");
  }
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(n) + 1);
  Rational term = 1;
  Rational power = 1;  // A^j
  for (int j = 0; j <= n; ++j) {
    c.push_back(term);
    term /= power;
    power *= a2;
  }
  return RealPolynomial(std::move(c));
}

AlternatingTheta::AlternatingTheta(const Interval& a2, int n, const Rational& s_max)
    : tail_(3, Interval(a2.precision())), prec_(a2.precision()) {
  const Interval inv_a2 = one(prec_) / a2;
  const Interval smax = Interval::point(s_max, prec_);
  const Interval eighth = Interval::point(Rational(1, 8), prec_);
  const Interval tiny = mul_2si(one(prec_), -static_cast<long>(prec_ + 32));

  Interval coef = one(prec_);
  Interval inv_pow = one(prec_);  // A^-j
  for (long j = 0;; ++j) {
    if (n >= 0 && j > n) {
      return;
    }
    if (n < 0 && j >= 3) {
      // Candidate first omitted term: index j, ratio bound s_max A^-j for i >= j.
      const Interval ratio = smax * inv_pow;
      const Interval t0 = abs(coef) * pow(smax, static_cast<unsigned long>(j));
      if (ratio.certainly_less(eighth) && t0.certainly_less(tiny)) {
        const Interval jj = Interval::point(j, prec_);
        const Interval t1 = abs(coef) * jj * pow(smax, static_cast<unsigned long>(j - 1));
        const Interval t2 = abs(coef) * jj * Interval::point(j - 1, prec_) * pow(smax, static_cast<unsigned long>(j - 2));
        // Each tail is at most twice its first term (ratio <= 3/8).
        tail_[0] = mul_2si(t0, 1).magnitude();
        tail_[1] = mul_2si(t1, 1).magnitude();
        tail_[2] = mul_2si(t2, 1).magnitude();
        return;
      }
    }
    c_.push_back(coef);
    coef = -(coef * inv_pow);
    inv_pow *= inv_a2;
  }
}

AlternatingTheta::AlternatingTheta(std::vector<Interval> coefficients)
    : c_(std::move(coefficients)), prec_(c_.empty() ? kDefaultPrecision : c_.front().precision()) {
  tail_.assign(3, Interval(prec_));
}

Interval AlternatingTheta::eval(const Interval& s, int k) const {
  Interval acc(prec_);
  for (std::size_t j = c_.size(); j-- > static_cast<std::size_t>(k);) {
    Interval c = c_[j];
    if (k >= 1) {
      c *= Interval::point(static_cast<long>(j), prec_);
    }
    if (k >= 2) {
      c *= Interval::point(static_cast<long>(j) - 1, prec_);
    }
    acc = acc * s + c;
  }
  return acc + Interval::symmetric(tail_[static_cast<std::size_t>(k)]);
}

namespace {

struct Box {
  Rational lo;
  Rational hi;
  Interval lower;
};

struct BoxOrder {
  bool operator()(const Box& a, const Box& b) const { return mpfr_greater_p(a.lower.lower(), b.lower.lower()) != 0; }
};

}  // namespace

SignSearch search_nonpositive(const AlternatingTheta& f, const Rational& lo, const Rational& hi,
                              const Rational& witness_hi, std::size_t budget) {
  const Precision prec = f.precision();
  SignSearch out;
  std::priority_queue<Box, std::vector<Box>, BoxOrder> queue;

  // Returns true when the box midpoint is a witness.
  auto enclose = [&](const Rational& a, const Rational& b) -> bool {
    const Rational m = (a + b) / 2;
    const Interval v = f.eval(Interval::point(m, prec));
    ++out.boxes;
    if (v.certainly_nonpositive() && m > lo && m < witness_hi) {
      out.outcome = SignSearch::Outcome::witness;
      out.witness = m;
      out.witness_value = v;
      return true;
    }
    const Interval box = Interval::bounds(a, b, prec);
    const Interval slope = f.eval(box, 1);
    const Interval offset = Interval::bounds(a - m, b - m, prec);
    Interval mean_value = v + slope * offset;
    queue.push({a, b, std::move(mean_value)});
    return false;
  };

  if (enclose(lo, hi)) {
    return out;
  }
  while (!queue.empty()) {
    Box top = queue.top();
    queue.pop();
    if (top.lower.certainly_positive()) {
      out.outcome = SignSearch::Outcome::positive;
      out.lower_bound = top.lower;
      return out;
    }
    if (out.boxes >= budget) {
      break;
    }
    const Rational m = (top.lo + top.hi) / 2;
    if (enclose(top.lo, m) || enclose(m, top.hi)) {
      return out;
    }
  }
  out.outcome = SignSearch::Outcome::undecided;
  return out;
}

SectionVerdict section_in_lp(const ThetaParams& params, int n, const SectionOptions& options) {
  if (n < 2) {
    throw InputError("section_in_lp needs n >= 2");
  }
  SectionVerdict verdict;
  for (Precision prec = std::max(options.precision, params.a2.precision()); prec <= kPrecisionCap; prec *= 2) {
    const ThetaParams p = params.with_precision(prec);
    const Rational lo = 1;
    const Rational hi = p.a2.upper_rational();
    const Rational witness_hi = p.a2.lower_rational();

    SignSearch search;
    if (n == 3) {
      // T_3(s) = (1 - s/A)(1 + (1/A - 1)s + s^2/A^2); the first factor is positive on (1, A).
      const Interval inv = one(prec) / p.a2;
      AlternatingTheta reduced({one(prec), inv - one(prec), sqr(inv)});
      search = search_nonpositive(reduced, lo, hi, witness_hi, options.box_budget);
    } else {
      search = search_nonpositive(AlternatingTheta(p.a2, n, hi), lo, hi, witness_hi, options.box_budget);
    }
    if (search.outcome == SignSearch::Outcome::witness) {
      verdict.criterion = true;
      verdict.witness_s = search.witness;
      verdict.witness_value = search.witness_value;
    } else if (search.outcome == SignSearch::Outcome::positive) {
      verdict.criterion = false;
    }

    const bool undecided = !verdict.criterion.has_value();
    if (params.a2_exact && (undecided || n <= options.exact_cross_check_max_n)) {
      verdict.exact = exact_real_rooted(*params.a2_exact, n);
      verdict.in_lp = *verdict.exact;
      verdict.method = undecided ? "exact-sturm" : "both";
      verdict.agreement = undecided || *verdict.criterion == *verdict.exact;
      return verdict;
    }
    if (!undecided) {
      verdict.in_lp = *verdict.criterion;
      verdict.method = "criterion";
      return verdict;
    }
  }
  throw PrecisionError("section_in_lp: criterion undecided at the precision cap (a^2 too close to c_n)");
}

ThetaSectionConstant compute_cn(int n, const Rational& tol, const CnOptions& options) {
  if (n < 2) {
    throw InputError("compute_cn needs n >= 2");
  }
  if (tol <= 0) {
    throw InputError("tolerance must be positive");
  }
  ThetaSectionConstant out;
  out.n = n;
  out.tol = tol;
  out.precision = precision_for(tol);

  SectionOptions sopt;
  sopt.exact_cross_check_max_n = -1;
  sopt.precision = out.precision;
  auto criterion = [&](const Rational& a2) {
    return section_in_lp(ThetaParams::from_a2(a2, out.precision), n, sopt).in_lp;
  };
  auto sturm = [&](const Rational& a2) { return exact_real_rooted(a2, n); };

  auto bisect = [&](const auto& pred, Rational& lo, Rational& hi) {
    lo = 2;
    hi = 6;
    if (pred(lo) || !pred(hi)) {
      throw Error("c_" + std::to_string(n) + " is not bracketed by [2, 6]");
    }
    while (hi - lo > tol) {
      const Rational mid = (lo + hi) / 2;
      (pred(mid) ? hi : lo) = mid;
    }
  };

  if (options.sturm_only) {
    bisect(sturm, out.lo, out.hi);
    out.method = "sturm-bisection";
    out.sturm_lo = out.lo;
    out.sturm_hi = out.hi;
    return out;
  }
  bisect(criterion, out.lo, out.hi);
  out.method = "criterion-bisection";
  if (n <= options.both_max_n) {
    Rational slo;
    Rational shi;
    bisect(sturm, slo, shi);
    out.sturm_lo = slo;
    out.sturm_hi = shi;
    out.method = "both";
    out.agreement = slo <= out.hi && out.lo <= shi;
  }
  return out;
}

QinfBracket estimate_qinf(int n_max, const Rational& tol, int jobs) {
  if (n_max < 5) {
    throw InputError("estimate_qinf needs n_max >= 5");
  }
  const int m = (n_max - 1) / 2;
  QinfBracket b;
  b.even_n = 2 * m;
  b.odd_n = 2 * m + 1;
  b.tol = tol;
  if (jobs > 1) {
    auto even = std::async(std::launch::async, [&] { return compute_cn(b.even_n, tol); });
    const ThetaSectionConstant odd = compute_cn(b.odd_n, tol);
    b.hi = even.get().hi;
    b.lo = odd.lo;
  } else {
    b.hi = compute_cn(b.even_n, tol).hi;
    b.lo = compute_cn(b.odd_n, tol).lo;
  }
  return b;
}

const QinfBracket& default_qinf_bracket() {
  static const QinfBracket bracket = estimate_qinf(20, Rational(1, 1000000000));
  return bracket;
}

bool theta_in_lp(const ThetaParams& params, const QinfBracket& bracket) {
  if (mpfr_cmp_q(params.a2.lower(), bracket.hi.get_mpq_t()) >= 0) {
    return true;
  }
  if (mpfr_cmp_q(params.a2.upper(), bracket.lo.get_mpq_t()) < 0) {
    return false;
  }
  std::ostringstream os;
  os << "a^2 meets the q_inf bracket [" << exact_decimal(bracket.lo, 60) << ", " << exact_decimal(bracket.hi, 60)
     << "]";
  throw InconclusiveError(os.str());
}

CriterionResult theta_in_lp_by_criterion(const ThetaParams& params, std::size_t budget) {
  const Rational hi = params.a2.upper_rational();
  const AlternatingTheta g(params.a2, -1, hi);
  const SignSearch search = search_nonpositive(g, Rational(1), hi, params.a2.lower_rational(), budget);
  CriterionResult r;
  switch (search.outcome) {
    case SignSearch::Outcome::witness:
      r.in_lp = true;
      r.witness_s = search.witness;
      r.witness_value = search.witness_value;
      return r;
    case SignSearch::Outcome::positive:
      r.in_lp = false;
      r.lower_bound = search.lower_bound;
      return r;
    case SignSearch::Outcome::undecided:
      break;
  }
  throw InconclusiveError("full-series criterion undecided (a^2 too close to q_inf)");
}

}  // namespace lpq
