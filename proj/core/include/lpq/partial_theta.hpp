#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lpq/interval.hpp"
#include "lpq/polynomial.hpp"
#include "lpq/rational.hpp"

namespace lpq {

/// Parameter of g_a(z) = sum_j z^j a^(-j^2), a > 1, with A = a^2.
struct ThetaParams {
  Interval a;
  Interval a2;
  /// Set when A is an exact rational.
  std::optional<Rational> a2_exact;
  /// Set when a itself is an exact rational.
  std::optional<Rational> a_exact;

  static ThetaParams from_a2(const Rational& a2, Precision prec = kDefaultPrecision);
  static ThetaParams from_a(const Rational& a, Precision prec = kDefaultPrecision);
  static ThetaParams from_interval_a2(const Interval& a2);
  [[nodiscard]] ThetaParams with_precision(Precision prec) const;
};

/// Enclosure of g_a(x) of width <= tol. Throws PrecisionError at the cap.
Interval theta_eval(const ThetaParams& params, const Rational& x, const Rational& tol);

/// S_n(z, g_a) when a is rational.
std::optional<RealPolynomial> exact_section(const ThetaParams& params, int n);
/// Coefficient enclosures a^(-j^2), j = 0..n.
std::vector<Interval> section_coefficients(const ThetaParams& params, int n);
/// S_n(a w, g_a) = sum_{j<=n} w^j A^(-j(j-1)/2): same zeros up to the factor a,
/// same second quotients, exact whenever A is rational.
RealPolynomial scaled_section(const Rational& a2, int n);

/// T(s) = sum_j (-1)^j s^j A^(-j(j-1)/2), i.e. g_a(-a s) or its n-th section.
/// With n < 0 the full series is used, truncated with a certified tail valid
/// for 0 <= s <= s_max.
class AlternatingTheta {
 public:
  AlternatingTheta(const Interval& a2, int n, const Rational& s_max);
  /// Coefficients supplied directly (finite sum, no tail).
  explicit AlternatingTheta(std::vector<Interval> coefficients);

  /// Enclosure of T^(k)(s) for s inside the box, k = 0, 1, 2.
  [[nodiscard]] Interval eval(const Interval& s, int k = 0) const;
  [[nodiscard]] Precision precision() const { return prec_; }
  [[nodiscard]] std::size_t terms() const { return c_.size(); }

 private:
  std::vector<Interval> c_;
  /// Bounds on the omitted tails of T, T', T''.
  std::vector<Interval> tail_;
  Precision prec_;
};

/// Outcome of the sign search for min T on [lo, hi].
struct SignSearch {
  enum class Outcome { witness, positive, undecided };
  Outcome outcome = Outcome::undecided;
  /// For witness: lo < s < hi with T(s) <= 0.
  Rational witness;
  Interval witness_value;
  /// Certified lower bound of T on [lo, hi] (positive outcome).
  Interval lower_bound;
  std::size_t boxes = 0;
};

/// Best-first branch and bound with mean-value enclosures. A witness must lie
/// strictly inside (lo, witness_hi).
SignSearch search_nonpositive(const AlternatingTheta& f, const Rational& lo, const Rational& hi,
                              const Rational& witness_hi, std::size_t budget = 20000);

struct SectionVerdict {
  bool in_lp = false;
  /// "criterion", "exact-sturm", or "both".
  std::string method;
  std::optional<bool> criterion;
  std::optional<bool> exact;
  /// False only when both routes ran and disagreed.
  bool agreement = true;
  /// Scaled witness s in (1, A) with T_n(s) <= 0, i.e. x = -a s.
  std::optional<Rational> witness_s;
  std::optional<Interval> witness_value;
};

struct SectionOptions {
  /// Exact Sturm cross-check is run for n up to this degree (rational A).
  int exact_cross_check_max_n = 12;
  Precision precision = kDefaultPrecision;
  std::size_t box_budget = 20000;
};

/// Real-rootedness of S_n(., g_a) via the alternating criterion on (1, A)
/// (equivalently x in (-a^3, -a)). For rational A the exact route is
/// authoritative and also decides the boundary. Throws PrecisionError when
/// A is irrational and the criterion stays undecided at the cap.
SectionVerdict section_in_lp(const ThetaParams& params, int n, const SectionOptions& options = {});

struct ThetaSectionConstant {
  int n = 0;
  Rational lo;
  Rational hi;
  Rational tol;
  /// "criterion-bisection", "sturm-bisection", or "both".
  std::string method;
  bool agreement = true;
  std::optional<Rational> sturm_lo;
  std::optional<Rational> sturm_hi;
  Precision precision = kDefaultPrecision;
};

struct CnOptions {
  /// Run the exact Sturm bisection alongside for n <= this.
  int both_max_n = 8;
  /// Use the exact route only (method sturm-bisection).
  bool sturm_only = false;
};

/// Bisection of c_n on the dyadic grid of [2, 6]: S_n is real-rooted exactly
/// for A >= c_n, so the bracket is (lo, hi] with lo failing and hi passing.
ThetaSectionConstant compute_cn(int n, const Rational& tol, const CnOptions& options = {});

struct QinfBracket {
  Rational lo;
  Rational hi;
  int odd_n = 0;
  int even_n = 0;
  Rational tol;
};

/// [c_{2m+1}.lo, c_{2m}.hi] with m the largest integer such that 2m + 1 <= n_max.
QinfBracket estimate_qinf(int n_max, const Rational& tol, int jobs = 1);

/// Bracket used by default for q_inf comparisons (n_max = 20, tol 1e-9),
/// computed once per process.
const QinfBracket& default_qinf_bracket();

/// a^2 >= q_inf decided against a bracket. Throws InconclusiveError when
/// A meets the bracket.
bool theta_in_lp(const ThetaParams& params, const QinfBracket& bracket = default_qinf_bracket());

struct CriterionResult {
  bool in_lp = false;
  std::optional<Rational> witness_s;
  std::optional<Interval> witness_value;
  Interval lower_bound;
};

/// Independent check on the full series: g_a is in L-P iff T(s) <= 0 for some
/// s in (1, A).
/// Throws InconclusiveError when the search cannot decide.
CriterionResult theta_in_lp_by_criterion(const ThetaParams& params, std::size_t budget = 200000);

struct SpectrumPoint {
  int k = 0;
  /// Enclosure of a~_k and of its square.
  Interval a_tilde;
  Interval a2_tilde;
  /// Enclosure of the double zero x = -a s of g_a.
  Interval double_root;
  /// Enclosure of s in the scaled variable.
  Interval s;
  bool rightmost_verified = false;
  bool multiplicity_two = false;
  /// Complex pairs of the degree-40 truncation for a between a~_{k+1} and a~_k
  /// (inside the trust disk); -1 when not checked.
  int pairs_between = -1;
};

/// Double real zeros of g_a for k = 1..k_max, certified by an interval
/// Krawczyk test on (A, s). Throws InconclusiveError when a point fails.
std::vector<SpectrumPoint> spectrum(int k_max, const Rational& tol, int jobs = 1);

}  // namespace lpq
