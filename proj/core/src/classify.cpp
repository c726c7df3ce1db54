#include "lpq/classify.hpp"

#include <algorithm>

#include "lpq/errors.hpp"

namespace lpq {

namespace {

std::string plain(const Rational& x) {
  const std::string d = exact_decimal(x);
  return d.empty() ? format_rational(x, 12) : d;
}

}  // namespace

bool HutchinsonReport::all_passed() const {
  if (!q_condition || nonreal_section) {
    return false;
  }
  for (const SubPolynomialCheck& c : checks) {
    if (!c.passed()) {
      return false;
    }
  }
  return !checks.empty();
}

HutchinsonReport hutchinson_check(const CoefficientSeries& series, long n_max, long max_span) {
  if (n_max < 2) {
    throw InputError("hutchinson_check needs N >= 2");
  }
  if (const auto avail = series.available_index(); avail && *avail < n_max) {
    throw InputError("series has only " + std::to_string(*avail + 1) + " coefficients, N = " + std::to_string(n_max));
  }
  const std::vector<Rational> a = series.prefix(n_max);
  HutchinsonReport r;
  r.n_max = n_max;
  r.q_condition = true;
  for (long n = 2; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n);
    if (a[i - 1] * a[i - 1] < 4 * a[i - 2] * a[i]) {
      r.q_condition = false;
      r.first_failing_index = n;
      break;
    }
  }

  auto check = [&](long m, long n) {
    std::vector<Rational> cofactor(a.begin() + m, a.begin() + n + 1);
    const HyperbolicityReport h = hyperbolicity_report(RealPolynomial(std::move(cofactor)));
    return std::pair{SubPolynomialCheck{m, n, h.z_c, h.real_rooted() && h.all_negative, h.all_simple}, h};
  };

  if (r.q_condition) {
    for (long n = 1; n <= n_max; ++n) {
      for (long m = 0; m < n; ++m) {
        if (m == 0 || n - m <= max_span) {
          r.checks.push_back(check(m, n).first);
        }
      }
    }
    return r;
  }
  for (long n = 2; n <= n_max; ++n) {
    auto [c, h] = check(0, n);
    r.checks.push_back(c);
    if (h.z_c > 0) {
      r.nonreal_section = n;
      r.nonreal_report = h;
      break;
    }
  }
  return r;
}

Classification classify(const CoefficientSeries& series, const ClassifyOptions& options) {
  Classification out;
  const QuotientProfile profile = quotients(series, options.n_max);
  const QinfBracket qinf = options.qinf ? *options.qinf : default_qinf_bracket();
  if (!profile.analytic) {
    out.reason = "finite coefficient data: conditions for all n cannot be checked from a prefix";
    if (std::all_of(profile.q.begin(), profile.q.end(), [](const Rational& q) { return q >= 4; })) {
      out.diagnostics.push_back("q_n >= 4 on the whole prefix");
    }
    return out;
  }
  const std::optional<LimitEstimate>& limit = profile.limit;
  const Rational q2 = profile.q_at(2);
  const bool all_at_least_4 = profile.nondecreasing ? q2 >= 4 : (limit && limit->value >= 4 && q2 >= 4);
  if (all_at_least_4) {
    out.verdict = Verdict::in_lp;
    out.branch = "hutchinson";
    out.reason = "q_n >= 4 for all n";
    return out;
  }
  if (!limit) {
    out.reason = "no limit for q_n";
    return out;
  }
  const Rational& c = limit->value;
  if (profile.nonincreasing) {
    if (c > qinf.hi) {
      out.verdict = Verdict::in_lp;
      out.branch = "decreasing-above-qinf";
      out.reason = "q_n nonincreasing with limit " + plain(c) + " >= q_inf";
      return out;
    }
    if (c >= qinf.lo) {
      out.reason = "limit " + plain(c) + " meets the q_inf bracket";
      return out;
    }
  }
  if (profile.nondecreasing) {
    CertifyOptions copt;
    copt.qinf = qinf;
    copt.jobs = options.jobs;
    CertifyOutcome cert = certify_not_lp(series, copt);
    out.branch = "certificate";
    out.verdict = cert.verdict;
    out.reason = cert.reason;
    out.certificate = std::move(cert.certificate);
    return out;
  }
  out.reason = "q_n is neither nondecreasing with limit below q_inf nor nonincreasing with limit above it";
  if (c < qinf.lo) {
    out.diagnostics.push_back("lim inf q_n < q_inf: not all but finitely many sections can be real-rooted");
  }
  return out;
}

}  // namespace lpq
