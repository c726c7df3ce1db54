#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpq/interval.hpp"
#include "lpq/polynomial.hpp"
#include "lpq/rational.hpp"
#include "lpq/series.hpp"

namespace lpq {

enum class Verdict { in_lp, not_in_lp, inconclusive };

/// "IN_LP", "NOT_IN_LP", "INCONCLUSIVE".
std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& text);

/// Necessary conditions from the power sums of reciprocal zeros.
struct Q2FloorResult {
  /// a1^2 a2 / a0^3 + 3 a1 a3 / a0^2 - 4 a2^2 / a0^2; nonnegative in L-P.
  Rational residual;
  /// q3 (q2 - 4) + 3, same sign as the residual; set when a0 = a1.
  std::optional<Rational> reduced;
  /// (a1 / a0)^2 - 2 a2 / a0 = sum of 1/z_k^2; nonnegative in L-P (q2 >= 2).
  Rational power_sum;
  Verdict verdict = Verdict::inconclusive;
};

/// The residual only disproves membership under nondecreasing quotients.
Q2FloorResult lemma_q2_floor(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3,
                             bool q_nondecreasing = true);

struct TracePoint {
  Rational x;
  Interval phi;
};

/// phi(x) = f(-x) > 0 on [0, q2] for a normalized series with nondecreasing
/// quotients and limit c:
///   [0, 1]   terms decrease in modulus (term domination),
///   (1, q2]  phi > S_{2m+1}(x, phi) >= T_{2m+1}(x) > 0, where
///            T_n(x) = sum_{k<=n} (-x)^k c^(-k(k-1)/2) has no zero in (1, q2]
///            (exact Sturm count) and the remainder R_{2m+2} is positive.
struct PositivityWitness {
  long m = 0;
  Rational c;
  Rational q2;
  /// S_{2m+1}(., g_sqrt(c)) is not real-rooted (section_in_lp).
  bool theta_section_not_lp = false;
  /// Sturm count of T_{2m+1} on (1, q2].
  int zeros_in_segment = -1;
  /// Sturm count of S_{2m+1}(x, phi) itself on (1, q2]; zero makes the
  /// witness independent of the domination inequalities.
  int section_zeros_in_segment = -1;
  Rational t_at_one;
  bool term_domination = false;
  bool remainder_positive = false;
  /// Enclosures of phi on a uniform mesh of [0, q2], end points included.
  std::vector<TracePoint> trace;

  [[nodiscard]] bool valid() const;
};

struct PositivityOptions {
  long m_cap = 1L << 12;
  int trace_points = 33;
  Rational tol = Rational(1, 1000000) / 1000000;
};

/// T_n(x) = sum_{k<=n} (-1)^k x^k c^(-k(k-1)/2).
RealPolynomial theta_lower_section(const Rational& c, long n);
/// Enclosure of phi(x) for 0 <= x, with the alternating tail bound.
Interval phi_eval(const CoefficientSeries& normalized, const Rational& x, const Rational& tol);

/// Throws InputError when the hypotheses are not met and InconclusiveError
/// when no m below the cap works.
PositivityWitness positivity_on_segment(const CoefficientSeries& normalized, const Rational& c,
                                        const PositivityOptions& options = {});
/// Re-checks a witness for a given m without searching.
bool check_positivity(const CoefficientSeries& normalized, const Rational& c, long m);

/// |S_4(q2 e^{i theta})| >= q2 / (q3^2 q4), S_4 = 1 - z + z^2/q2 - z^3/(q2^2 q3) + z^4/(q2^3 q3^2 q4).
struct CircleMin {
  Rational bound;
  /// Exact: |S_4|^2 - bound^2 as a polynomial in t = cos(theta) has no sign
  /// change on [-1, 1] and is positive somewhere.
  bool exact_certified = false;
  /// Minimum of |S_4|^2 over rational circle points (exact).
  Rational sampled_min_sq;
  int samples = 0;
  [[nodiscard]] bool sampled_ok() const { return sampled_min_sq >= bound * bound; }
};

RealPolynomial s4_polynomial(const Rational& q2, const Rational& q3, const Rational& q4);
/// Throws InputError outside 3 <= q2 < 4, q2 <= q3 <= q4.
CircleMin s4_circle_min(const Rational& q2, const Rational& q3, const Rational& q4, int samples = 128);

/// max |R_5(q2 e^{i theta})| <= q2 / (q3^3 q4^3 - q3^2).
struct TailBound {
  Rational bound;
  /// Upper bound for max |R_5|^2 over the sampled circle points, truncation included.
  Rational sampled_max_sq;
  int samples = 0;
  [[nodiscard]] bool sampled_ok() const { return sampled_max_sq <= bound * bound; }
};

/// q = (q2, q3, q4, q5, ...); missing quotients are extended by the last one,
/// the worst case among nondecreasing continuations.
TailBound tail_bound_r5(const std::vector<Rational>& q, int samples = 128);
Rational tail_bound_value(const Rational& q2, const Rational& q3, const Rational& q4);
Rational circle_bound_value(const Rational& q2, const Rational& q3, const Rational& q4);
/// circle bound - tail bound.
Rational rouche_margin(const Rational& q2, const Rational& q3, const Rational& q4);

struct GraceWitness {
  /// Q(z) = z^2 (-3 q2 (q2 - 4) + 2 (q2 - 6) z + z^2), apolar to S_4.
  RealPolynomial q;
  std::vector<Rational> roots;
  /// sum_k (-1)^k C(4,k) a_k b_{4-k} in binomial form; exactly 0.
  Rational residual;
  bool roots_in_disk = false;
  /// Zeros of S_4 in |z| < q2 by the argument principle.
  int inside_count = -1;
  [[nodiscard]] bool valid() const { return residual == 0 && roots_in_disk && inside_count >= 1; }
};

/// Apolarity residual of two degree-4 polynomials.
Rational apolarity_residual(const RealPolynomial& p, const RealPolynomial& q);
/// Throws InputError when q2 < 3.
GraceWitness grace_apolar_witness(const Rational& q2, const Rational& q3, const Rational& q4);

}  // namespace lpq
