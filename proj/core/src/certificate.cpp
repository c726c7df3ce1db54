#include "lpq/certificate.hpp"

#include <future>

#include "lpq/errors.hpp"
#include "lpq/numeric_oracle.hpp"
#include "lpq/winding.hpp"

namespace lpq {

using nlohmann::json;

std::string to_string(NonMembershipCertificate::Route r) {
  return r == NonMembershipCertificate::Route::q2_floor ? "q2-floor" : "rouche-grace";
}

namespace {

std::string num(const Rational& v) { return format_rational(v); }
std::string num(const Interval& v) { return format_interval(v); }
std::string brief(const Rational& v) {
  const std::string d = exact_decimal(v);
  return d.empty() ? format_rational(v, 12) : d;
}

// |value - mid| <= rad for a "mid ± rad" string, exactly.
bool string_contains(const json& text, const Rational& value) {
  if (!text.is_string()) {
    return false;
  }
  const std::string s = text.get<std::string>();
  std::string mid = s;
  std::string rad = "0";
  for (const std::string sep : {"±", "+-", "+/-"}) {
    if (auto pos = s.find(sep); pos != std::string::npos) {
      mid = s.substr(0, pos);
      rad = s.substr(pos + sep.size());
      break;
    }
  }
  try {
    return abs(Rational(value - parse_rational(mid))) <= parse_rational(rad);
  } catch (const Error&) {
    return false;
  }
}

json polynomial_json(const RealPolynomial& p) {
  json out = json::array();
  for (const Rational& c : p.coefficients()) {
    out.push_back(num(c));
  }
  return out;
}

Rational limit_of(const QuotientRule& rule) {
  const auto c = rule.limit();
  if (!c) {
    throw InputError("rule has no analytic limit");
  }
  return *c;
}

}  // namespace

json NonMembershipCertificate::to_json() const {
  json j;
  j["conclusion"] = lpq::to_string(Verdict::not_in_lp);
  j["route"] = lpq::to_string(route);
  j["rule"] = rule.to_json();
  j["q2"] = num(q2);
  j["q3"] = num(q3);
  j["q4"] = num(q4);
  j["limit"] = {{"c", num(c)}, {"qinf_lo", num(qinf.lo)}, {"qinf_hi", num(qinf.hi)}};
  json floor = {{"residual", num(q2_floor.residual)},
                {"power_sum", num(q2_floor.power_sum)},
                {"verdict", lpq::to_string(q2_floor.verdict)}};
  if (q2_floor.reduced) {
    floor["reduced"] = num(*q2_floor.reduced);
  }
  j["lemma_q2_floor"] = floor;
  if (positivity) {
    json trace = json::array();
    for (const TracePoint& p : positivity->trace) {
      trace.push_back({{"x", num(p.x)}, {"phi", num(p.phi)}});
    }
    j["positivity_witness"] = {{"m", positivity->m},
                               {"section_degree", 2 * positivity->m + 1},
                               {"theta_section_not_lp", positivity->theta_section_not_lp},
                               {"zeros_in_segment", positivity->zeros_in_segment},
                               {"section_zeros_in_segment", positivity->section_zeros_in_segment},
                               {"t_at_one", num(positivity->t_at_one)},
                               {"term_domination", positivity->term_domination},
                               {"remainder_positive", positivity->remainder_positive},
                               {"trace", trace}};
  }
  if (circle) {
    j["circle_lower_bound"] = {{"value", num(circle->bound)},
                               {"exact_certified", circle->exact_certified},
                               {"sampled_min", num(sqrt(Interval::point(circle->sampled_min_sq)))},
                               {"samples", circle->samples}};
  }
  if (tail) {
    j["tail_upper_bound"] = {{"value", num(tail->bound)},
                             {"sampled_max", num(sqrt(Interval::point(tail->sampled_max_sq)))},
                             {"samples", tail->samples}};
    j["rouche_margin"] = num(rouche_margin);
  }
  if (grace) {
    json roots = json::array();
    for (const Rational& r : grace->roots) {
      roots.push_back(num(r));
    }
    j["grace_witness"] = {{"Q", polynomial_json(grace->q)},
                          {"roots", roots},
                          {"apolarity_residual", num(grace->residual)},
                          {"inside_count", grace->inside_count},
                          {"phi_winding", phi_winding}};
  }
  j["oracle"] = {{"degree", oracle.degree},
                 {"pairs_inside", oracle.pairs_inside},
                 {"z_c", oracle.z_c()},
                 {"nonreal_count", oracle.nonreal_count}};
  return j;
}

OracleConfirmation oracle_confirmation(const CoefficientSeries& normalized, int degree, const Rational& radius) {
  const RootCensus census = oracle_census(normalized.section(degree).reflected(), 60, to_double(radius));
  OracleConfirmation o;
  o.degree = degree;
  o.pairs_inside = census.nonreal_pairs_inside;
  o.nonreal_count = census.nonreal_count;
  return o;
}

int phi_winding_number(const CoefficientSeries& normalized, const Rational& radius) {
  // Extend the section until the omitted terms, which decrease at least
  // geometrically with ratio 1/2 from there on, fall below 2^-100.
  const Rational tiny = Rational(1) / (Rational(1) << 100);
  long n = 4;
  for (;; ++n) {
    const Rational next = normalized.coefficient(n + 1) * pow(radius, n + 1);
    const Rational after = normalized.coefficient(n + 2) * pow(radius, n + 2);
    if (after * 2 <= next && next < tiny) {
      ComplexFunction f = ComplexFunction::from_polynomial(normalized.section(n).reflected());
      f.tail = Interval::point(2 * next);
      return winding_number(f, radius);
    }
    if (n > 4000) {
      throw PrecisionError("phi tail does not settle on the circle");
    }
  }
}

CertifyOutcome certify_not_lp(const CoefficientSeries& series, const CertifyOptions& options) {
  CertifyOutcome out;
  const auto& gen = series.generator();
  if (!gen || gen->finite()) {
    out.reason = "finite coefficient data: the hypothesis lim q_n = c cannot be checked from a prefix";
    return out;
  }
  const QuotientRule rule = gen->normalized();
  const CoefficientSeries phi = CoefficientSeries::from_rule(rule, 8);
  const QuotientProfile profile = quotients(phi, 16);
  if (!(profile.analytic && profile.nondecreasing)) {
    out.reason = "hypothesis failed: q_n is not nondecreasing";
    return out;
  }
  const Rational c = limit_of(rule);
  if (c <= 1) {
    out.reason = "hypothesis failed: limit c <= 1";
    return out;
  }
  const QinfBracket qinf = options.qinf ? *options.qinf : default_qinf_bracket();
  if (c >= qinf.lo) {
    out.reason = c > qinf.hi ? "hypothesis failed: limit c = " + brief(c) + " is above q_inf"
                             : "hypothesis undecided: limit c = " + brief(c) + " meets the q_inf bracket";
    return out;
  }

  NonMembershipCertificate cert;
  cert.rule = rule;
  cert.q2 = profile.q_at(2);
  cert.q3 = profile.q_at(3);
  cert.q4 = profile.q_at(4);
  cert.c = c;
  cert.qinf = qinf;
  cert.q2_floor = lemma_q2_floor(Rational(1), Rational(1), phi.coefficient(2), phi.coefficient(3), true);

  auto confirm = [&](const Rational& radius) {
    for (int d : options.oracle_degrees) {
      cert.oracle = oracle_confirmation(phi, d, radius);
      if (cert.oracle.confirmed()) {
        return true;
      }
    }
    return false;
  };

  if (cert.q2 < 3) {
    if (cert.q2_floor.verdict != Verdict::not_in_lp) {
      out.reason = "q_2 < 3 but the power-sum residual is nonnegative";
      return out;
    }
    cert.route = NonMembershipCertificate::Route::q2_floor;
    // Truncations are trusted up to p_{d/2}, the middle of their zero moduli.
    bool confirmed = false;
    for (int d : options.oracle_degrees) {
      Rational p = 1;
      for (long k = 2; k <= d / 2; ++k) {
        p *= profile.q_at(std::min<long>(k, profile.n_max()));
      }
      cert.oracle = oracle_confirmation(phi, d, p);
      if (cert.oracle.confirmed()) {
        confirmed = true;
        break;
      }
    }
    if (!confirmed) {
      out.reason = "numeric oracle found no nonreal zero pair in any truncation";
      return out;
    }
    out.verdict = Verdict::not_in_lp;
    out.reason = "q_2 = " + num(cert.q2) + " < 3: power-sum residual is negative";
    out.certificate = std::move(cert);
    return out;
  }

  std::vector<Rational> q_list;
  for (long n = 2; n <= profile.n_max(); ++n) {
    q_list.push_back(profile.q_at(n));
  }
  const auto launch = options.jobs > 1 ? std::launch::async : std::launch::deferred;
  try {
    auto positivity = std::async(launch, [&] { return positivity_on_segment(phi, c, options.positivity); });
    auto circle = std::async(launch, [&] { return s4_circle_min(cert.q2, cert.q3, cert.q4); });
    auto tail = std::async(launch, [&] { return tail_bound_r5(q_list); });
    auto grace = std::async(launch, [&] { return grace_apolar_witness(cert.q2, cert.q3, cert.q4); });
    auto winding = std::async(launch, [&] { return phi_winding_number(phi, cert.q2); });
    cert.positivity = positivity.get();
    cert.circle = circle.get();
    cert.tail = tail.get();
    cert.grace = grace.get();
    cert.phi_winding = winding.get();
  } catch (const InconclusiveError& e) {
    out.reason = e.what();
    return out;
  }
  cert.rouche_margin = rouche_margin(cert.q2, cert.q3, cert.q4);

  if (!cert.positivity->valid()) {
    out.reason = "positivity witness on [0, q_2] failed";
  } else if (!cert.circle->exact_certified || !cert.circle->sampled_ok()) {
    out.reason = "circle lower bound not certified";
  } else if (!cert.tail->sampled_ok()) {
    out.reason = "tail upper bound violated on samples";
  } else if (cert.rouche_margin <= 0) {
    out.reason = "Rouche margin is not positive";
  } else if (!cert.grace->valid()) {
    out.reason = "Grace witness failed";
  } else if (cert.phi_winding != cert.grace->inside_count) {
    out.reason = "winding numbers of phi and S_4 disagree";
  } else if (!confirm(cert.q2)) {
    out.reason = "numeric oracle found no nonreal zero pair inside |z| < q_2";
  } else {
    out.verdict = Verdict::not_in_lp;
    out.reason = "phi > 0 on [0, q_2] while phi has a zero in |z| < q_2";
    out.certificate = std::move(cert);
  }
  return out;
}

bool VerifyReport::ok() const {
  if (checks.empty()) {
    return false;
  }
  for (const auto& [name, pass] : checks) {
    if (!pass) {
      return false;
    }
  }
  return true;
}

VerifyReport verify_certificate(const json& j) {
  VerifyReport r;
  auto check = [&r](const std::string& name, bool pass) { r.checks.emplace_back(name, pass); };
  const QuotientRule rule = QuotientRule::from_json(j.at("rule")).normalized();
  check("rule_has_limit", !rule.finite() && rule.limit().has_value());
  if (!r.ok()) {
    return r;
  }
  const CoefficientSeries phi = CoefficientSeries::from_rule(rule, 8);
  const QuotientProfile profile = quotients(phi, 16);
  const Rational q2 = profile.q_at(2);
  const Rational q3 = profile.q_at(3);
  const Rational q4 = profile.q_at(4);
  const Rational c = limit_of(rule);
  check("conclusion", j.value("conclusion", "") == lpq::to_string(Verdict::not_in_lp));
  check("quotients_nondecreasing", profile.analytic && profile.nondecreasing);
  check("q2_q3_q4_match", string_contains(j.at("q2"), q2) && string_contains(j.at("q3"), q3) &&
                              string_contains(j.at("q4"), q4));
  check("limit_matches", string_contains(j.at("limit").at("c"), c));

  const Q2FloorResult floor = lemma_q2_floor(Rational(1), Rational(1), phi.coefficient(2), phi.coefficient(3), true);
  check("q2_floor_residual", string_contains(j.at("lemma_q2_floor").at("residual"), floor.residual));
  const std::string route = j.value("route", "");
  if (route == "q2-floor") {
    check("q2_below_3", q2 < 3);
    check("q2_floor_negative", floor.verdict == Verdict::not_in_lp);
    return r;
  }
  check("route", route == "rouche-grace");
  check("q2_at_least_3", q2 >= 3);
  // Consistency only: the witness below does not depend on c < q_inf.
  check("limit_below_qinf_bracket",
        Interval::point(c).certainly_less(parse_interval(j.at("limit").at("qinf_lo").get<std::string>())));

  const json& pw = j.at("positivity_witness");
  const long m = pw.at("m").get<long>();
  check("positivity_witness", check_positivity(phi, c, m) && pw.at("zeros_in_segment").get<int>() == 0 &&
                                  pw.at("section_zeros_in_segment").get<int>() == 0 && q2 > 1 && q2 * q3 > 1);

  const CircleMin circle = s4_circle_min(q2, q3, q4, 16);
  check("circle_lower_bound", circle.exact_certified && string_contains(j.at("circle_lower_bound").at("value"), circle.bound));
  const Rational tail = tail_bound_value(q2, q3, q4);
  check("tail_upper_bound", string_contains(j.at("tail_upper_bound").at("value"), tail));
  const Rational margin = rouche_margin(q2, q3, q4);
  check("rouche_margin_positive", margin > 0 && string_contains(j.at("rouche_margin"), margin));

  const json& gw = j.at("grace_witness");
  const GraceWitness grace = grace_apolar_witness(q2, q3, q4);
  bool q_match = gw.at("Q").size() == grace.q.coefficients().size();
  for (std::size_t i = 0; q_match && i < grace.q.coefficients().size(); ++i) {
    q_match = string_contains(gw.at("Q")[i], grace.q.coefficients()[i]);
  }
  check("grace_polynomial", q_match);
  check("apolarity_residual_zero", grace.residual == 0 && string_contains(gw.at("apolarity_residual"), Rational(0)));
  check("grace_roots_in_disk", grace.roots_in_disk);
  check("grace_inside_count", grace.inside_count >= 1 && gw.at("inside_count").get<int>() == grace.inside_count);
  return r;
}

}  // namespace lpq
