#include "lpq/series.hpp"

#include <fstream>
#include <sstream>

#include "lpq/errors.hpp"

namespace lpq {
namespace {

using Json = nlohmann::json;

// Floating literals are kept as strings; everything else as usual.
class ExactNumberSax : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using nlohmann::detail::json_sax_dom_parser<Json>::json_sax_dom_parser;

  bool number_float(double /*value*/, const std::string& raw) {
    std::string copy = raw;
    return string(copy);
  }
};

Rational require_positive(const Rational& v, const std::string& what) {
  if (v <= 0) {
    throw InputError(what + " must be positive");
  }
  return v;
}

}  // namespace

QuotientRule QuotientRule::constant(const Rational& q, const Rational& a0, const Rational& a1) {
  QuotientRule r;
  r.kind = Kind::constant;
  r.q = require_positive(q, "q");
  r.a0 = require_positive(a0, "a0");
  r.a1 = require_positive(a1, "a1");
  return r;
}

QuotientRule QuotientRule::from_list(std::vector<Rational> q, const Rational& a0, const Rational& a1) {
  if (q.empty()) {
    throw InputError("empty quotient list");
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    require_positive(q[i], "q_" + std::to_string(i + 2));
  }
  QuotientRule r;
  r.kind = Kind::list;
  r.list = std::move(q);
  r.a0 = require_positive(a0, "a0");
  r.a1 = require_positive(a1, "a1");
  return r;
}

QuotientRule QuotientRule::limit_increasing(const Rational& c, const Rational& d, const Rational& a0,
                                            const Rational& a1) {
  if (c - d / 2 <= 0) {
    throw InputError("q_2 = c - d/2 must be positive");
  }
  if (c < 0) {
    throw InputError("q_n = c - d/n must stay positive (c >= 0)");
  }
  QuotientRule r;
  r.kind = Kind::limit_increasing;
  r.c = c;
  r.d = d;
  r.a0 = require_positive(a0, "a0");
  r.a1 = require_positive(a1, "a1");
  return r;
}

std::optional<long> QuotientRule::last_index() const {
  if (kind == Kind::list) {
    return static_cast<long>(list.size()) + 1;
  }
  return std::nullopt;
}

Rational QuotientRule::q_at(long n) const {
  if (n < 2) {
    throw InputError("q_n is defined for n >= 2");
  }
  switch (kind) {
    case Kind::constant:
      return q;
    case Kind::list:
      if (n > static_cast<long>(list.size()) + 1) {
        throw InputError("quotient list ends at n = " + std::to_string(list.size() + 1));
      }
      return list[static_cast<std::size_t>(n - 2)];
    case Kind::limit_increasing:
      return c - d / Rational(n);
  }
  return q;
}

std::optional<Rational> QuotientRule::limit() const {
  switch (kind) {
    case Kind::constant:
      return q;
    case Kind::limit_increasing:
      return c;
    case Kind::list:
      break;
  }
  return std::nullopt;
}

QuotientRule QuotientRule::normalized() const {
  QuotientRule r = *this;
  r.a0 = 1;
  r.a1 = 1;
  return r;
}

Json QuotientRule::to_json() const {
  Json j;
  switch (kind) {
    case Kind::constant:
      j["type"] = "constant";
      j["q"] = to_fraction_string(q);
      break;
    case Kind::list: {
      j["type"] = "list";
      Json arr = Json::array();
      for (const auto& v : list) {
        arr.push_back(to_fraction_string(v));
      }
      j["q"] = arr;
      break;
    }
    case Kind::limit_increasing:
      j["type"] = "limit-increasing";
      j["c"] = to_fraction_string(c);
      j["d"] = to_fraction_string(d);
      break;
  }
  j["a0"] = to_fraction_string(a0);
  j["a1"] = to_fraction_string(a1);
  return j;
}

QuotientRule QuotientRule::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw InputError("rule descriptor needs a string field \"type\"");
  }
  const std::string type = j["type"].get<std::string>();
  const Rational a0 = j.contains("a0") ? json_rational(j["a0"], "a0") : Rational(1);
  const Rational a1 = j.contains("a1") ? json_rational(j["a1"], "a1") : Rational(1);
  if (type == "constant") {
    if (!j.contains("q")) {
      throw InputError("constant rule needs \"q\"");
    }
    return constant(json_rational(j["q"], "q"), a0, a1);
  }
  if (type == "list") {
    if (!j.contains("q") || !j["q"].is_array()) {
      throw InputError("list rule needs an array \"q\"");
    }
    std::vector<Rational> q;
    for (const auto& v : j["q"]) {
      q.push_back(json_rational(v, "q"));
    }
    return from_list(std::move(q), a0, a1);
  }
  if (type == "limit-increasing") {
    if (!j.contains("c") || !j.contains("d")) {
      throw InputError("limit-increasing rule needs \"c\" and \"d\"");
    }
    return limit_increasing(json_rational(j["c"], "c"), json_rational(j["d"], "d"), a0, a1);
  }
  throw InputError("unknown rule type '" + type + "'");
}

Json parse_json_exact(const std::string& text) {
  Json result;
  ExactNumberSax sax(result);
  try {
    Json::sax_parse(text, &sax);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return result;
}

Rational json_rational(const Json& value, const std::string& what) {
  if (value.is_string()) {
    return parse_rational(value.get<std::string>());
  }
  if (value.is_number_integer()) {
    return Rational(std::to_string(value.get<long long>()));
  }
  if (value.is_number_unsigned()) {
    return Rational(std::to_string(value.get<unsigned long long>()));
  }
  if (value.is_number_float()) {
    // Only reached for JSON not produced by parse_json_exact.
    return parse_rational(value.dump());
  }
  throw InputError("field \"" + what + "\" is not a number");
}

QuotientRule parse_rule(const std::string& json_text) { return QuotientRule::from_json(parse_json_exact(json_text)); }

CoefficientSeries CoefficientSeries::from_entries(std::vector<Rational> entries) {
  if (entries.empty()) {
    throw InputError("empty coefficient series");
  }
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k] <= 0) {
      throw InputError("coefficient a_" + std::to_string(k) + " is not positive");
    }
  }
  CoefficientSeries s;
  s.entries_ = std::move(entries);
  return s;
}

CoefficientSeries CoefficientSeries::from_rule(const QuotientRule& rule, long materialize_to) {
  CoefficientSeries s;
  s.generator_ = rule;
  if (auto last = rule.last_index()) {
    materialize_to = *last;
  }
  s.entries_ = s.prefix(std::max(materialize_to, 1L));
  return s;
}

std::optional<long> CoefficientSeries::available_index() const {
  if (!generator_) {
    return max_index();
  }
  return generator_->last_index();
}

Rational CoefficientSeries::coefficient(long k) const {
  if (k < 0) {
    throw InputError("negative coefficient index");
  }
  if (k <= max_index()) {
    return entries_[static_cast<std::size_t>(k)];
  }
  return prefix(k).back();
}

std::vector<Rational> CoefficientSeries::prefix(long n) const {
  if (n < 0) {
    throw InputError("negative coefficient index");
  }
  if (n <= max_index()) {
    return {entries_.begin(), entries_.begin() + n + 1};
  }
  if (!generator_) {
    throw InputError("series has only " + std::to_string(entries_.size()) + " coefficients, index " +
                     std::to_string(n) + " requested");
  }
  const QuotientRule& rule = *generator_;
  if (auto last = rule.last_index(); last && n > *last) {
    throw InputError("rule defines coefficients only up to index " + std::to_string(*last));
  }
  std::vector<Rational> a;
  a.reserve(static_cast<std::size_t>(n) + 1);
  a.push_back(rule.a0);
  if (n >= 1) {
    a.push_back(rule.a1);
  }
  Rational p = rule.a0 / rule.a1;
  for (long k = 2; k <= n; ++k) {
    p *= rule.q_at(k);
    a.push_back(a.back() / p);
  }
  return a;
}

RealPolynomial CoefficientSeries::section(long n) const { return RealPolynomial(prefix(n)); }

CoefficientSeries parse_coefficient_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Rational> entries;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string index_text;
    std::string value_text;
    if (!(fields >> index_text)) {
      continue;
    }
    std::string extra;
    if (!(fields >> value_text) || (fields >> extra)) {
      throw InputError("line " + std::to_string(line_no) + ": expected \"k value\"");
    }
    long index = -1;
    try {
      std::size_t used = 0;
      index = std::stol(index_text, &used);
      if (used != index_text.size()) {
        index = -1;
      }
    } catch (const std::exception&) {
      index = -1;
    }
    if (index != static_cast<long>(entries.size())) {
      throw InputError("line " + std::to_string(line_no) + ": expected index " + std::to_string(entries.size()));
    }
    Rational value;
    try {
      value = parse_rational(value_text);
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (value <= 0) {
      throw InputError("coefficient a_" + std::to_string(index) + " is not positive (line " +
                       std::to_string(line_no) + ")");
    }
    entries.push_back(value);
  }
  return CoefficientSeries::from_entries(std::move(entries));
}

CoefficientSeries load_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  // A file may hold a rule descriptor instead of coefficient lines.
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return CoefficientSeries::from_rule(parse_rule(text));
  }
  return parse_coefficient_text(text);
}

CoefficientSeries load_series(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') {
    return CoefficientSeries::from_rule(parse_rule(source));
  }
  return load_series_file(source);
}

std::string to_string(QuotientProfile::Monotone m) {
  switch (m) {
    case QuotientProfile::Monotone::increasing:
      return "increasing";
    case QuotientProfile::Monotone::decreasing:
      return "decreasing";
    case QuotientProfile::Monotone::neither:
      break;
  }
  return "neither";
}

QuotientProfile quotients(const CoefficientSeries& series, long n_max) {
  if (n_max < 2) {
    throw InputError("quotients need n_max >= 2");
  }
  const std::vector<Rational> a = series.prefix(n_max);
  QuotientProfile prof;
  prof.p.reserve(static_cast<std::size_t>(n_max));
  for (long n = 1; n <= n_max; ++n) {
    prof.p.push_back(a[static_cast<std::size_t>(n - 1)] / a[static_cast<std::size_t>(n)]);
  }
  for (long n = 2; n <= n_max; ++n) {
    prof.q.push_back(prof.p[static_cast<std::size_t>(n - 1)] / prof.p[static_cast<std::size_t>(n - 2)]);
  }

  const auto& gen = series.generator();
  if (gen && !gen->finite()) {
    prof.analytic = true;
    const Rational d = gen->kind == QuotientRule::Kind::limit_increasing ? gen->d : Rational(0);
    prof.nondecreasing = d >= 0;
    prof.nonincreasing = d <= 0;
    prof.strict = d != 0;
    prof.limit = LimitEstimate{*gen->limit(), Rational(0), true};
  } else {
    prof.nondecreasing = prof.nonincreasing = true;
    prof.strict = true;
    for (std::size_t i = 1; i < prof.q.size(); ++i) {
      const int cmp = ::cmp(prof.q[i], prof.q[i - 1]);
      prof.nondecreasing = prof.nondecreasing && cmp >= 0;
      prof.nonincreasing = prof.nonincreasing && cmp <= 0;
      prof.strict = prof.strict && cmp != 0;
    }
    const Rational last = prof.q.back();
    const Rational step = prof.q.size() >= 2 ? abs(last - prof.q[prof.q.size() - 2]) : Rational(0);
    prof.limit = LimitEstimate{last, step, false};
  }
  prof.strict = prof.strict && (prof.nondecreasing || prof.nonincreasing);
  if (prof.nondecreasing) {
    prof.monotone = QuotientProfile::Monotone::increasing;
  } else if (prof.nonincreasing) {
    prof.monotone = QuotientProfile::Monotone::decreasing;
  }
  return prof;
}

CoefficientSeries coeffs_from_quotients(const std::vector<Rational>& q, const Rational& a0, const Rational& a1) {
  return CoefficientSeries::from_rule(QuotientRule::from_list(q, a0, a1));
}

CoefficientSeries normalize(const CoefficientSeries& series) {
  if (const auto& gen = series.generator()) {
    return CoefficientSeries::from_rule(gen->normalized(), series.max_index());
  }
  const auto& a = series.entries();
  if (a.size() < 2) {
    throw InputError("normalization needs a_0 and a_1");
  }
  const Rational ratio = a[0] / a[1];
  std::vector<Rational> b;
  b.reserve(a.size());
  Rational scale = 1 / a[0];
  for (const auto& v : a) {
    b.push_back(v * scale);
    scale *= ratio;
  }
  return CoefficientSeries::from_entries(std::move(b));
}

}  // namespace lpq
