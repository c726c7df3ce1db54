#include "lpq/report.hpp"

#include <sstream>

namespace lpq {

using nlohmann::json;

namespace {

std::string directed(const Rational& x, int digits, mpfr_rnd_t rnd) {
  if (std::string exact = exact_decimal(x, digits); !exact.empty()) {
    return exact;
  }
  mpfr_t v;
  mpfr_init2(v, static_cast<mpfr_prec_t>(digits * 4 + 64));
  mpfr_set_q(v, x.get_mpq_t(), rnd);
  const char* fmt = rnd == MPFR_RNDD ? "%.*RDe" : "%.*RUe";
  const int n = mpfr_snprintf(nullptr, 0, fmt, digits - 1, v);
  std::string out(static_cast<std::size_t>(n) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), fmt, digits - 1, v);
  out.resize(static_cast<std::size_t>(n));
  mpfr_clear(v);
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_lower(const Rational& x, int digits) { return directed(x, digits, MPFR_RNDD); }
std::string format_upper(const Rational& x, int digits) { return directed(x, digits, MPFR_RNDU); }

std::string quotients_csv(const QuotientProfile& profile) {
  std::ostringstream out;
  out << "n,p_n,q_n\n";
  for (long n = 1; n <= profile.n_max(); ++n) {
    out << n << ',' << format_rational(profile.p_at(n)) << ',';
    if (n >= 2) {
      out << format_rational(profile.q_at(n));
    }
    out << '\n';
  }
  return out.str();
}

std::string cn_csv(const std::vector<ThetaSectionConstant>& constants) {
  std::ostringstream out;
  out << "n,c_n_lo,c_n_hi\n";
  for (const auto& c : constants) {
    out << c.n << ',' << format_lower(c.lo) << ',' << format_upper(c.hi) << '\n';
  }
  return out.str();
}

std::string spectrum_csv(const std::vector<SpectrumPoint>& points) {
  std::ostringstream out;
  out << "k,a_lo,a_hi\n";
  for (const auto& p : points) {
    out << p.k << ',' << format_lower(p.a_tilde.lower_rational()) << ',' << format_upper(p.a_tilde.upper_rational())
        << '\n';
  }
  return out.str();
}

std::string hutchinson_csv(const HutchinsonReport& report) {
  std::ostringstream out;
  out << "m,n,z_c,negative,simple\n";
  for (const auto& c : report.checks) {
    out << c.m << ',' << c.n << ',' << c.z_c << ',' << bool_text(c.negative) << ',' << bool_text(c.simple) << '\n';
  }
  return out.str();
}

json to_json(const QuotientProfile& profile) {
  json rows = json::array();
  for (long n = 1; n <= profile.n_max(); ++n) {
    json row = {{"n", n}, {"p_n", format_rational(profile.p_at(n))}};
    if (n >= 2) {
      row["q_n"] = format_rational(profile.q_at(n));
    }
    rows.push_back(row);
  }
  json j = {{"rows", rows},
            {"monotone", to_string(profile.monotone)},
            {"strict", profile.strict},
            {"analytic", profile.analytic}};
  if (profile.limit) {
    j["limit"] = {{"value", format_rational(profile.limit->value)},
                  {"error", format_rational(profile.limit->error)},
                  {"analytic", profile.limit->analytic}};
  }
  return j;
}

json to_json(const HyperbolicityReport& report) {
  json brackets = json::array();
  for (const auto& b : report.brackets) {
    brackets.push_back({{"lo", format_lower(b.lo)}, {"hi", format_upper(b.hi)}, {"multiplicity", b.multiplicity}});
  }
  return {{"degree", report.degree},
          {"real_root_count", report.real_root_count},
          {"z_c", report.z_c},
          {"real_rooted", report.real_rooted()},
          {"all_negative", report.all_negative},
          {"all_nonpositive", report.all_nonpositive},
          {"all_simple", report.all_simple},
          {"method", report.method},
          {"brackets", brackets}};
}

json to_json(const ThetaSectionConstant& c) {
  json j = {{"n", c.n},
            {"lo", format_lower(c.lo)},
            {"hi", format_upper(c.hi)},
            {"tol", format_rational(c.tol)},
            {"method", c.method},
            {"agreement", c.agreement}};
  if (c.sturm_lo && c.sturm_hi) {
    j["sturm_lo"] = format_lower(*c.sturm_lo);
    j["sturm_hi"] = format_upper(*c.sturm_hi);
  }
  return j;
}

json to_json(const QinfBracket& b) {
  return {{"lo", format_lower(b.lo)},
          {"hi", format_upper(b.hi)},
          {"width", format_upper(b.hi - b.lo, 6)},
          {"odd_n", b.odd_n},
          {"even_n", b.even_n},
          {"tol", format_rational(b.tol)}};
}

json to_json(const SpectrumPoint& p) {
  return {{"k", p.k},
          {"a_tilde", format_interval(p.a_tilde)},
          {"a2_tilde", format_interval(p.a2_tilde)},
          {"double_root", format_interval(p.double_root)},
          {"rightmost_verified", p.rightmost_verified},
          {"multiplicity_two", p.multiplicity_two},
          {"pairs_between", p.pairs_between}};
}

json to_json(const HutchinsonReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"m", c.m}, {"n", c.n}, {"z_c", c.z_c}, {"negative", c.negative}, {"simple", c.simple}, {"passed", c.passed()}});
  }
  json j = {{"N", r.n_max}, {"q_condition", r.q_condition}, {"all_passed", r.all_passed()}, {"checks", checks}};
  if (r.first_failing_index) {
    j["first_failing_index"] = *r.first_failing_index;
  }
  if (r.nonreal_section) {
    j["nonreal_section"] = {{"n", *r.nonreal_section}, {"report", to_json(*r.nonreal_report)}};
  }
  return j;
}

json to_json(const Classification& c) {
  json j = {{"verdict", to_string(c.verdict)}, {"branch", c.branch}, {"reason", c.reason}, {"diagnostics", c.diagnostics}};
  if (c.certificate) {
    j["certificate"] = c.certificate->to_json();
  }
  return j;
}

}  // namespace lpq
