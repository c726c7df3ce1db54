#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpq/certificate.hpp"
#include "lpq/lemmas.hpp"
#include "lpq/series.hpp"
#include "lpq/sturm.hpp"

namespace lpq {

/// sum_{k=m}^{n} a_k z^k; zeros are 0 (m-fold) and those of the cofactor.
struct SubPolynomialCheck {
  long m = 0;
  long n = 0;
  int z_c = 0;
  /// Cofactor zeros are all negative (real-rooted).
  bool negative = false;
  /// Cofactor zeros are simple; not implied at q_n = 4 exactly, where the
  /// quadratic a_m + a_{m+1} z + a_{m+2} z^2 has a double zero.
  bool simple = false;
  /// Real and non-positive zeros.
  [[nodiscard]] bool passed() const { return z_c == 0 && negative; }
};

struct HutchinsonReport {
  long n_max = 0;
  /// All q_n >= 4 for 2 <= n <= n_max.
  bool q_condition = false;
  std::optional<long> first_failing_index;
  std::vector<SubPolynomialCheck> checks;
  /// A full section with nonreal zeros, when one exists up to n_max.
  std::optional<long> nonreal_section;
  std::optional<HyperbolicityReport> nonreal_report;
  [[nodiscard]] bool all_passed() const;
};

/// Sub-polynomials with n - m <= max_span and all full sections S_n, n <= n_max.
HutchinsonReport hutchinson_check(const CoefficientSeries& series, long n_max, long max_span = 8);

struct Classification {
  Verdict verdict = Verdict::inconclusive;
  /// "hutchinson", "decreasing-above-qinf", "certificate", or "none".
  std::string branch = "none";
  std::string reason;
  std::vector<std::string> diagnostics;
  std::optional<NonMembershipCertificate> certificate;
};

struct ClassifyOptions {
  std::optional<QinfBracket> qinf;
  long n_max = 24;
  int jobs = 1;
};

/// Three decision branches; anything else is INCONCLUSIVE with a reason.
Classification classify(const CoefficientSeries& series, const ClassifyOptions& options = {});

}  // namespace lpq
