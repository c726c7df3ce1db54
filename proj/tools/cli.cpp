#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "lpq/certificate.hpp"
#include "lpq/classify.hpp"
#include "lpq/errors.hpp"
#include "lpq/partial_theta.hpp"
#include "lpq/report.hpp"
#include "lpq/series.hpp"
#include "lpq/sturm.hpp"

namespace lpq::cli {

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Artifact {
  std::string body;
  int code = kOk;
};

// Exact text when short, otherwise an enclosure.
std::string show(const Rational& x) {
  if (std::string d = exact_decimal(x); !d.empty()) {
    return d;
  }
  if (std::string f = to_fraction_string(x); f.size() <= 24) {
    return f;
  }
  return format_rational(x, 20);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CoefficientSeries load_input(const RunConfig& c) {
  if (!c.rule.empty() && !c.file.empty()) {
    throw InputError("give either --rule or --file, not both");
  }
  if (!c.rule.empty()) {
    return CoefficientSeries::from_rule(parse_rule(c.rule));
  }
  if (!c.file.empty()) {
    return load_series_file(c.file);
  }
  throw InputError(c.command + " needs --file or --rule");
}

void require_format(const RunConfig& c, std::initializer_list<Format> allowed) {
  for (Format f : allowed) {
    if (f == c.format) {
      return;
    }
  }
  throw InputError("output format not supported by '" + c.command + "'");
}

std::vector<Rational> czds_gamma(const std::string& name, int degree) {
  std::vector<Rational> g;
  Rational fact = 1;
  for (int k = 0; k <= degree; ++k) {
    if (name == "theta") {
      g.push_back(Rational(1) / (Rational(1) << static_cast<unsigned>(k * k)));
    } else if (name == "exp") {
      if (k > 0) {
        fact *= k;
      }
      g.push_back(1 / fact);
    } else {
      throw InputError("unknown --gamma '" + name + "' (theta or exp)");
    }
  }
  return g;
}

// ---- commands -------------------------------------------------------------------

Artifact cmd_quotients(const RunConfig& c) {
  const QuotientProfile p = quotients(load_input(c), c.n_max);
  if (c.format == Format::csv) {
    return {quotients_csv(p)};
  }
  if (c.format == Format::json) {
    return {dump(to_json(p))};
  }
  std::ostringstream out;
  for (long n = 1; n <= p.n_max(); ++n) {
    out << "n=" << n << "  p_n=" << show(p.p_at(n));
    if (n >= 2) {
      out << "  q_n=" << show(p.q_at(n));
    }
    out << '\n';
  }
  out << "monotone: " << to_string(p.monotone) << (p.analytic ? " (all n)" : " (prefix)") << '\n';
  if (p.limit) {
    out << "limit: " << show(p.limit->value) << (p.limit->analytic ? " (analytic)" : " (last term)")
        << '\n';
  }
  return {out.str()};
}

Artifact cmd_hutchinson(const RunConfig& c) {
  const HutchinsonReport r = hutchinson_check(load_input(c), c.big_n);
  if (c.format == Format::csv) {
    return {hutchinson_csv(r)};
  }
  if (c.format == Format::json) {
    return {dump(to_json(r))};
  }
  std::ostringstream out;
  out << "q_n >= 4 up to N=" << r.n_max << ": " << (r.q_condition ? "yes" : "no");
  if (r.first_failing_index) {
    out << " (fails at n=" << *r.first_failing_index << ")";
  }
  out << '\n';
  std::size_t passed = 0;
  std::size_t simple = 0;
  for (const auto& s : r.checks) {
    passed += s.passed() ? 1 : 0;
    simple += s.simple ? 1 : 0;
  }
  out << "sub-polynomials real with nonpositive zeros: " << passed << "/" << r.checks.size() << '\n';
  out << "sub-polynomials with simple zeros: " << simple << "/" << r.checks.size() << '\n';
  if (r.nonreal_section) {
    out << "nonreal section: S_" << *r.nonreal_section << " with Z_c=" << r.nonreal_report->z_c << '\n';
  }
  return {out.str()};
}

Artifact cmd_sturm(const RunConfig& c) {
  require_format(c, {Format::text, Format::json});
  const HyperbolicityReport r = hyperbolicity_report(parse_polynomial(c.poly));
  if (c.format == Format::json) {
    return {dump(to_json(r))};
  }
  std::ostringstream out;
  out << "degree " << r.degree << ", real roots " << r.real_root_count << ", Z_c " << r.z_c << '\n';
  for (const auto& b : r.brackets) {
    out << "  (" << format_lower(b.lo) << ", " << format_upper(b.hi) << "]  multiplicity " << b.multiplicity << '\n';
  }
  out << "real-rooted: " << (r.real_rooted() ? "yes" : "no") << ", all negative: " << (r.all_negative ? "yes" : "no")
      << ", simple: " << (r.all_simple ? "yes" : "no") << '\n';
  return {out.str()};
}

Artifact cmd_czds(const RunConfig& c) {
  require_format(c, {Format::text, Format::json});
  const RealPolynomial p = parse_polynomial(c.poly);
  const CzdsResult r = czds_check(czds_gamma(c.gamma, p.degree()), p);
  if (c.format == Format::json) {
    return {dump({{"gamma", c.gamma}, {"z_c_before", r.z_c_before}, {"z_c_after", r.z_c_after}, {"satisfied", r.satisfied}})};
  }
  std::ostringstream out;
  out << "Z_c before " << r.z_c_before << ", after " << r.z_c_after << ": "
      << (r.satisfied ? "nonincreasing" : "INCREASED") << '\n';
  return {out.str()};
}

Artifact cmd_theta_eval(const RunConfig& c) {
  require_format(c, {Format::text, Format::json});
  if (c.a2.empty() == c.a.empty()) {
    throw InputError("theta eval needs exactly one of --a2 or --a");
  }
  const ThetaParams params = c.a2.empty() ? ThetaParams::from_a(parse_rational(c.a)) : ThetaParams::from_a2(parse_rational(c.a2));
  const Interval v = theta_eval(params, parse_rational(c.x), c.tol);
  if (c.format == Format::json) {
    return {dump({{"x", format_rational(parse_rational(c.x))}, {"value", format_interval(v)}})};
  }
  return {format_interval(v) + "\n"};
}

Artifact cmd_theta_cn(const RunConfig& c) {
  const ThetaSectionConstant cn = compute_cn(c.n, c.tol);
  if (c.format == Format::csv) {
    return {cn_csv({cn})};
  }
  if (c.format == Format::json) {
    return {dump(to_json(cn))};
  }
  return {"c_" + std::to_string(cn.n) + " in (" + format_lower(cn.lo) + ", " + format_upper(cn.hi) + "]  [" +
          cn.method + (cn.agreement ? "" : ", ROUTES DISAGREE") + "]\n"};
}

Artifact cmd_theta_qinf(const RunConfig& c) {
  const QinfBracket b = estimate_qinf(static_cast<int>(c.n_max), c.tol, c.jobs);
  const auto constants = parallel_map(c.jobs, static_cast<std::size_t>(c.n_max - 1),
                                      [&](std::size_t i) { return compute_cn(static_cast<int>(i) + 2, c.tol); });
  if (c.format == Format::csv) {
    return {cn_csv(constants)};
  }
  if (c.format == Format::json) {
    json rows = json::array();
    for (const auto& cn : constants) {
      rows.push_back(to_json(cn));
    }
    return {dump({{"bracket", to_json(b)}, {"constants", rows}})};
  }
  std::ostringstream out;
  out << "q_inf in [" << format_lower(b.lo) << ", " << format_upper(b.hi) << "]  (c_" << b.odd_n << " .. c_" << b.even_n
      << ", width " << format_upper(b.hi - b.lo, 4) << ")\n";
  return {out.str()};
}

Artifact cmd_theta_spectrum(const RunConfig& c) {
  const auto points = spectrum(c.k_max, c.tol, c.jobs);
  if (c.format == Format::csv) {
    return {spectrum_csv(points)};
  }
  if (c.format == Format::json) {
    json rows = json::array();
    for (const auto& p : points) {
      rows.push_back(to_json(p));
    }
    return {dump(rows)};
  }
  std::ostringstream out;
  for (const auto& p : points) {
    out << "k=" << p.k << "  a~=" << format_interval(p.a_tilde) << "  a~^2=" << format_interval(p.a2_tilde)
        << "  double zero " << format_interval(p.double_root, 12);
    if (p.pairs_between >= 0) {
      out << "  pairs below: " << p.pairs_between;
    }
    out << '\n';
  }
  return {out.str()};
}

Artifact cmd_certify(const RunConfig& c) {
  require_format(c, {Format::text, Format::json});
  CertifyOptions opt;
  opt.jobs = c.jobs;
  const CertifyOutcome o = certify_not_lp(load_input(c), opt);
  const int code = o.verdict == Verdict::not_in_lp ? kOk : kInconclusive;
  if (c.format == Format::json) {
    return {dump(o.certificate ? o.certificate->to_json() : json{{"conclusion", to_string(o.verdict)}, {"reason", o.reason}}),
            code};
  }
  std::ostringstream out;
  out << to_string(o.verdict) << ": " << o.reason << '\n';
  if (o.certificate) {
    const auto& cert = *o.certificate;
    out << "route " << to_string(cert.route) << ", q2=" << show(cert.q2) << '\n';
    if (cert.tail) {
      out << "Rouche margin " << format_lower(cert.rouche_margin, 12) << ", positivity m=" << cert.positivity->m
          << ", S_4 zeros inside " << cert.grace->inside_count << '\n';
    }
    out << "oracle: degree " << cert.oracle.degree << ", Z_c inside " << cert.oracle.z_c() << '\n';
  }
  return {out.str(), code};
}

Artifact cmd_verify(const RunConfig& c) {
  require_format(c, {Format::text, Format::json});
  if (c.file.empty()) {
    throw InputError("verify needs --file <certificate.json>");
  }
  std::ifstream in(c.file);
  if (!in) {
    throw InputError("cannot read '" + c.file + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  json cert;
  try {
    cert = parse_json_exact(buf.str());
  } catch (const json::exception& e) {
    throw InputError(std::string("certificate is not valid JSON: ") + e.what());
  }
  VerifyReport r;
  try {
    r = verify_certificate(cert);
  } catch (const json::exception& e) {
    throw InputError(std::string("certificate is missing fields: ") + e.what());
  }
  const int code = r.ok() ? kOk : kFailed;
  if (c.format == Format::json) {
    json checks = json::object();
    for (const auto& [name, pass] : r.checks) {
      checks[name] = pass;
    }
    return {dump({{"valid", r.ok()}, {"checks", checks}}), code};
  }
  std::ostringstream out;
  for (const auto& [name, pass] : r.checks) {
    out << (pass ? "ok    " : "FAIL  ") << name << '\n';
  }
  out << (r.ok() ? "certificate valid" : "certificate INVALID") << '\n';
  return {out.str(), code};
}

Artifact cmd_classify(const RunConfig& c) {
  require_format(c, {Format::text, Format::json});
  ClassifyOptions opt;
  opt.jobs = c.jobs;
  const Classification r = classify(load_input(c), opt);
  const int code = r.verdict == Verdict::inconclusive ? kInconclusive : kOk;
  if (c.format == Format::json) {
    return {dump(to_json(r)), code};
  }
  std::ostringstream out;
  out << to_string(r.verdict) << " [" << r.branch << "]: " << r.reason << '\n';
  for (const auto& d : r.diagnostics) {
    out << "note: " << d << '\n';
  }
  return {out.str(), code};
}

struct Row {
  std::string check;
  std::string expected;
  std::string computed;
  std::string tolerance;
  bool pass = false;
};

Artifact cmd_reproduce(const RunConfig& c) {
  require_format(c, {Format::text, Format::json});
  std::vector<Row> rows;
  const Rational one_e6(1, 1000000);
  for (int n : {2, 3}) {
    const ThetaSectionConstant cn = compute_cn(n, c.tol);
    const Rational expected = n == 2 ? 4 : 3;
    const bool pass = abs(Rational(cn.lo - expected)) <= one_e6 && abs(Rational(cn.hi - expected)) <= one_e6;
    rows.push_back({"c_" + std::to_string(n), show(expected),
                    "(" + format_lower(cn.lo, 12) + ", " + format_upper(cn.hi, 12) + "]", "1e-6", pass});
  }
  const QinfBracket b = estimate_qinf(20, c.tol, c.jobs);
  const Rational quoted_qinf = parse_rational("3.23363666");
  // The printed constant is a truncation: the bracket must meet [3.23363666, 3.23363667]
  // and lie within 1e-4 of it.
  const Rational trunc_hi = quoted_qinf + Rational(1, 100000000);
  const bool meets = b.lo <= trunc_hi && b.hi >= quoted_qinf;
  const bool close = b.lo >= quoted_qinf - Rational(1, 10000) && b.hi <= quoted_qinf + Rational(1, 10000);
  rows.push_back({"q_inf (n_max=20)", "3.23363666", "[" + format_lower(b.lo, 12) + ", " + format_upper(b.hi, 12) + "]",
                  "1e-4", meets && close && b.hi - b.lo <= Rational(1, 1000)});
  const auto points = spectrum(1, c.tol, c.jobs);
  const Interval widened = points[0].a2_tilde.widened(Interval::point(one_e6));
  rows.push_back({"a~_1^2 vs q_inf", "meets q_inf bracket", format_interval(points[0].a2_tilde, 12), "1e-6",
                  widened.intersects(Interval::bounds(b.lo, b.hi))});
  rows.push_back({"a~_1", format_interval(sqrt(Interval::bounds(b.lo, b.hi)), 10), format_interval(points[0].a_tilde, 12),
                  "1e-6", widened.intersects(Interval::bounds(b.lo, b.hi))});
  struct Example {
    const char* label;
    const char* rule;
    Verdict expected;
  };
  const Example examples[] = {
      {"classify q=4", R"({"type":"constant","q":4})", Verdict::in_lp},
      {"classify q_n=3.5+1/n", R"({"type":"limit-increasing","c":3.5,"d":-1})", Verdict::in_lp},
      {"classify q_n=3.2-0.2/n", R"({"type":"limit-increasing","c":3.2,"d":0.2})", Verdict::not_in_lp},
  };
  ClassifyOptions opt;
  opt.qinf = b;
  opt.jobs = c.jobs;
  for (const Example& e : examples) {
    const Classification r = classify(CoefficientSeries::from_rule(parse_rule(e.rule)), opt);
    rows.push_back({e.label, to_string(e.expected), to_string(r.verdict) + " [" + r.branch + "]", "exact",
                    r.verdict == e.expected});
  }

  bool all = true;
  for (const Row& r : rows) {
    all = all && r.pass;
  }
  const int code = all ? kOk : kFailed;
  if (c.format == Format::json) {
    json j = json::array();
    for (const Row& r : rows) {
      j.push_back({{"check", r.check}, {"expected", r.expected}, {"computed", r.computed}, {"tolerance", r.tolerance},
                   {"pass", r.pass}});
    }
    return {dump({{"rows", j}, {"all_passed", all}}), code};
  }
  std::ostringstream out;
  out << std::left << std::setw(24) << "check" << std::setw(28) << "expected" << std::setw(44) << "computed"
      << std::setw(8) << "tol" << "status\n";
  for (const Row& r : rows) {
    out << std::setw(24) << r.check << std::setw(28) << r.expected << std::setw(44) << r.computed << std::setw(8)
        << r.tolerance << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  if (!all) {
    out << "failures:";
    for (const Row& r : rows) {
      if (!r.pass) {
        out << ' ' << r.check << ';';
      }
    }
    out << '\n';
  }
  return {out.str(), code};
}

Artifact dispatch(const RunConfig& c) {
  if (c.command == "quotients") return cmd_quotients(c);
  if (c.command == "hutchinson") return cmd_hutchinson(c);
  if (c.command == "sturm") return cmd_sturm(c);
  if (c.command == "czds") return cmd_czds(c);
  if (c.command == "theta eval") return cmd_theta_eval(c);
  if (c.command == "theta cn") return cmd_theta_cn(c);
  if (c.command == "theta qinf") return cmd_theta_qinf(c);
  if (c.command == "theta spectrum") return cmd_theta_spectrum(c);
  if (c.command == "certify") return cmd_certify(c);
  if (c.command == "verify") return cmd_verify(c);
  if (c.command == "classify") return cmd_classify(c);
  if (c.command == "reproduce") return cmd_reproduce(c);
  throw InputError("unknown command '" + c.command + "'");
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << body)) {
    throw InputError("cannot write '" + path + "'");
  }
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw InputError("unknown --format '" + s + "' (text, json, csv)");
}

}  // namespace

void validate(const RunConfig& c) {
  if (c.tol <= 0) {
    throw InputError("--tol must be positive");
  }
  if (c.jobs < 1) {
    throw InputError("--jobs must be >= 1");
  }
  if (c.command == "theta qinf" && c.n_max < 5) {
    throw InputError("theta qinf needs --n-max >= 5");
  }
  if (c.command == "quotients" && c.n_max < 2) {
    throw InputError("quotients needs --n-max >= 2");
  }
  if (c.command == "hutchinson" && c.big_n < 2) {
    throw InputError("hutchinson needs --N >= 2");
  }
  if (c.command == "theta cn" && c.n < 2) {
    throw InputError("theta cn needs --n >= 2");
  }
  if (c.command == "theta spectrum" && c.k_max < 1) {
    throw InputError("theta spectrum needs --k-max >= 1");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  validate(config);
  const std::string started = utc_now();
  const auto t0 = std::chrono::steady_clock::now();
  const Artifact a = dispatch(config);
  if (config.out.empty()) {
    out << a.body;
    return a.code;
  }
  write_file(config.out, a.body);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const json meta = {{"command", config.command}, {"argv", config.argv},     {"version", kVersion},
                     {"started_utc", started},    {"elapsed_seconds", elapsed}, {"jobs", config.jobs},
                     {"exit_code", a.code}};
  write_file(config.out + ".meta.json", meta.dump(2) + "\n");
  err << "wrote " << config.out << '\n';
  return a.code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  c.argv = args;
  std::string tol = "1e-9";
  std::string format;
  CLI::App app{"Laguerre-Polya membership tools for power series with positive coefficients", "lpq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "Target tolerance (decimal or fraction)");
    sub->add_option("--format", format, "text, json, or csv");
    sub->add_option("--out", c.out, "Write the artifact here (plus <out>.meta.json)");
    sub->add_option("--jobs", c.jobs, "Parallelism degree");
  };
  auto input = [&](CLI::App* sub) {
    sub->add_option("--file", c.file, "Coefficient file (\"k value\" lines) or rule JSON file");
    sub->add_option("--rule", c.rule, "Inline quotient rule JSON");
  };

  auto* quot = app.add_subcommand("quotients", "Quotients p_n, q_n with monotonicity and limit");
  input(quot);
  quot->add_option("--n-max", c.n_max, "Largest n");
  auto* hut = app.add_subcommand("hutchinson", "q_n >= 4 test with exact checks of sections and sub-polynomials");
  input(hut);
  hut->add_option("--N", c.big_n, "Largest degree");
  auto* sturm = app.add_subcommand("sturm", "Exact real-root report of a polynomial");
  sturm->add_option("--poly", c.poly, "Coefficients, low degree first")->required();
  auto* czds = app.add_subcommand("czds", "Z_c before and after a multiplier sequence");
  czds->add_option("--poly", c.poly, "Coefficients, low degree first")->required();
  czds->add_option("--gamma", c.gamma, "theta (2^-k^2) or exp (1/k!)");
  auto* theta = app.add_subcommand("theta", "Partial theta function");
  theta->require_subcommand(1);
  auto* eval = theta->add_subcommand("eval", "Enclosure of g_a(x)");
  eval->add_option("--a2", c.a2, "a^2");
  eval->add_option("--a", c.a, "a");
  eval->add_option("--x", c.x, "Argument")->required();
  auto* cn = theta->add_subcommand("cn", "Section constant c_n");
  cn->add_option("--n", c.n, "Section degree")->required();
  auto* qinf = theta->add_subcommand("qinf", "Bracket for q_inf");
  qinf->add_option("--n-max", c.n_max, "Largest section degree");
  auto* spect = theta->add_subcommand("spectrum", "Double-zero parameters a~_k");
  spect->add_option("--k-max", c.k_max, "Number of points");
  auto* cert = app.add_subcommand("certify", "Non-membership certificate");
  input(cert);
  auto* ver = app.add_subcommand("verify", "Re-check a certificate");
  ver->add_option("--file", c.file, "Certificate JSON")->required();
  auto* cls = app.add_subcommand("classify", "IN_LP / NOT_IN_LP / INCONCLUSIVE");
  input(cls);
  auto* rep = app.add_subcommand("reproduce", "Reference constants as a pass/fail table");
  for (CLI::App* leaf : {quot, hut, sturm, czds, eval, cn, qinf, spect, cert, ver, cls, rep}) {
    common(leaf);
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    for (CLI::App* leaf : sub->get_subcommands()) {
      c.command += " " + leaf->get_name();
    }
  }
  try {
    c.tol = parse_rational(tol);
    const bool certifying = c.command == "certify";
    c.format = format.empty() ? (certifying ? Format::json : Format::text) : parse_format(format);
    return run(c, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InconclusiveError& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const PrecisionError& e) {
    err << "precision cap: " << e.what() << '\n';
    return kPrecisionCap;
  }
}

}  // namespace lpq::cli
