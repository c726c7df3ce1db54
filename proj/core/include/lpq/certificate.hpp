#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpq/lemmas.hpp"
#include "lpq/partial_theta.hpp"
#include "lpq/series.hpp"

namespace lpq {

/// Nonreal zeros of a truncation of phi inside |z| < q2 (numeric oracle,
/// not part of the proof).
struct OracleConfirmation {
  int degree = 0;
  int pairs_inside = 0;
  int nonreal_count = 0;
  [[nodiscard]] int z_c() const { return 2 * pairs_inside; }
  [[nodiscard]] bool confirmed() const { return pairs_inside >= 1; }
};

/// Evidence that f is not in L-P. Route rouche_grace: phi > 0 on [0, q2],
/// S_4 has a zero in |z| < q2 (Grace), and the circle bound beats the tail
/// bound, so phi has a zero in |z| < q2 that cannot be real. Route q2_floor:
/// the power-sum residual is negative.
struct NonMembershipCertificate {
  enum class Route { rouche_grace, q2_floor };

  Route route = Route::rouche_grace;
  /// Normalized generating rule.
  QuotientRule rule;
  Rational q2;
  Rational q3;
  Rational q4;
  Rational c;
  QinfBracket qinf;
  Q2FloorResult q2_floor;
  std::optional<PositivityWitness> positivity;
  std::optional<CircleMin> circle;
  std::optional<TailBound> tail;
  Rational rouche_margin;
  std::optional<GraceWitness> grace;
  /// Zeros of phi in |z| < q2 by the argument principle; must equal the S_4 count.
  int phi_winding = -1;
  OracleConfirmation oracle;

  [[nodiscard]] nlohmann::json to_json() const;
};

std::string to_string(NonMembershipCertificate::Route r);

struct CertifyOptions {
  /// q_inf bracket; default_qinf_bracket() when unset.
  std::optional<QinfBracket> qinf;
  PositivityOptions positivity;
  std::vector<int> oracle_degrees{20, 40, 60, 80};
  int jobs = 1;
};

struct CertifyOutcome {
  Verdict verdict = Verdict::inconclusive;
  /// Failing hypothesis for INCONCLUSIVE, route summary otherwise.
  std::string reason;
  std::optional<NonMembershipCertificate> certificate;
};

/// Requires a generating rule (finite data is refused), analytically
/// nondecreasing quotients and a limit below the q_inf bracket.
CertifyOutcome certify_not_lp(const CoefficientSeries& series, const CertifyOptions& options = {});

/// Nonreal pairs of the degree-n section of phi inside |z| < radius.
OracleConfirmation oracle_confirmation(const CoefficientSeries& normalized, int degree, const Rational& radius);

/// Zeros of phi in |z| < radius: section of growing degree plus a certified
/// tail on the circle.
int phi_winding_number(const CoefficientSeries& normalized, const Rational& radius);

struct VerifyReport {
  std::vector<std::pair<std::string, bool>> checks;
  [[nodiscard]] bool ok() const;
};

/// Re-checks a serialized certificate from its rule: every bound is
/// recomputed exactly, the stored m is re-tested, no search is repeated.
VerifyReport verify_certificate(const nlohmann::json& certificate);

}  // namespace lpq
