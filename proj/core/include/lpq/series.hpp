#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "lpq/polynomial.hpp"
#include "lpq/rational.hpp"

namespace lpq {

/// Quotient-rule descriptor. q_n is defined for n >= 2.
///   constant:          q_n = q
///   list:              q_n = q[n - 2] for 2 <= n <= q.size() + 1
///   limit-increasing:  q_n = c - d/n
struct QuotientRule {
  enum class Kind { constant, list, limit_increasing };

  Kind kind = Kind::constant;
  Rational q;
  std::vector<Rational> list;
  Rational c;
  Rational d;
  Rational a0 = 1;
  Rational a1 = 1;

  static QuotientRule constant(const Rational& q, const Rational& a0 = 1, const Rational& a1 = 1);
  static QuotientRule from_list(std::vector<Rational> q, const Rational& a0 = 1, const Rational& a1 = 1);
  static QuotientRule limit_increasing(const Rational& c, const Rational& d, const Rational& a0 = 1,
                                       const Rational& a1 = 1);

  [[nodiscard]] bool finite() const { return kind == Kind::list; }
  /// Largest n with q_n defined, when finite.
  [[nodiscard]] std::optional<long> last_index() const;
  [[nodiscard]] Rational q_at(long n) const;
  /// Analytic limit of q_n (none for lists).
  [[nodiscard]] std::optional<Rational> limit() const;
  /// Same quotients with a0 = a1 = 1.
  [[nodiscard]] QuotientRule normalized() const;

  [[nodiscard]] nlohmann::json to_json() const;
  static QuotientRule from_json(const nlohmann::json& j);
};

/// JSON parse that keeps floating literals as their source text (strings), so
/// decimals such as 3.2 become exact rationals downstream.
nlohmann::json parse_json_exact(const std::string& text);
/// Exact rational from a JSON number or numeric string.
Rational json_rational(const nlohmann::json& value, const std::string& what);

QuotientRule parse_rule(const std::string& json_text);

/// Positive Taylor coefficients a_0, a_1, ... Entries 0..max_index() are
/// materialized; a generator extends the series on demand. Immutable.
class CoefficientSeries {
 public:
  /// Throws InputError naming the first nonpositive index.
  static CoefficientSeries from_entries(std::vector<Rational> entries);
  static CoefficientSeries from_rule(const QuotientRule& rule, long materialize_to = 2);

  [[nodiscard]] long max_index() const { return static_cast<long>(entries_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }
  [[nodiscard]] const std::optional<QuotientRule>& generator() const { return generator_; }
  /// Largest index available at all (materialized or generated).
  [[nodiscard]] std::optional<long> available_index() const;

  [[nodiscard]] Rational coefficient(long k) const;
  /// a_0..a_n.
  [[nodiscard]] std::vector<Rational> prefix(long n) const;
  /// S_n(z) = sum_{k<=n} a_k z^k.
  [[nodiscard]] RealPolynomial section(long n) const;

 private:
  std::vector<Rational> entries_;
  std::optional<QuotientRule> generator_;
};

/// "k value" lines, blank lines and '#' comments ignored; indices contiguous from 0.
CoefficientSeries parse_coefficient_text(const std::string& text);
/// Coefficient lines, or a rule descriptor when the file starts with '{'.
CoefficientSeries load_series_file(const std::string& path);
/// A rule descriptor when the source starts with '{', otherwise a file path.
CoefficientSeries load_series(const std::string& source);

struct LimitEstimate {
  Rational value;
  Rational error;
  /// True for a rule's analytic limit; false for a last-term extrapolation.
  bool analytic = false;
};

struct QuotientProfile {
  enum class Monotone { increasing, decreasing, neither };

  /// p[0] = p_1, ..., p[n_max - 1] = p_{n_max}.
  std::vector<Rational> p;
  /// q[0] = q_2, ..., q[n_max - 2] = q_{n_max}.
  std::vector<Rational> q;
  /// Non-strict; a constant sequence counts as increasing.
  Monotone monotone = Monotone::neither;
  bool nondecreasing = false;
  bool nonincreasing = false;
  bool strict = false;
  /// Monotonicity known for all n (rules), not only for the prefix.
  bool analytic = false;
  std::optional<LimitEstimate> limit;

  [[nodiscard]] const Rational& q_at(long n) const { return q.at(static_cast<std::size_t>(n - 2)); }
  [[nodiscard]] const Rational& p_at(long n) const { return p.at(static_cast<std::size_t>(n - 1)); }
  [[nodiscard]] long n_max() const { return static_cast<long>(p.size()); }
};

std::string to_string(QuotientProfile::Monotone m);

QuotientProfile quotients(const CoefficientSeries& series, long n_max);
/// q = (q_2, ..., q_N).
CoefficientSeries coeffs_from_quotients(const std::vector<Rational>& q, const Rational& a0, const Rational& a1);
/// b_k = a_k / a_0 * (a_0 / a_1)^k, so b_0 = b_1 = 1 and every q_n is unchanged.
CoefficientSeries normalize(const CoefficientSeries& series);

}  // namespace lpq
