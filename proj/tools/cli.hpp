#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lpq/rational.hpp"

namespace lpq::cli {

enum ExitCode : int {
  kOk = 0,
  /// verify rejected a certificate, or reproduce had a failing row.
  kFailed = 1,
  kInconclusive = 2,
  kInputError = 64,
  kPrecisionCap = 70,
};

enum class Format { text, json, csv };

struct RunConfig {
  /// "quotients", "theta cn", ...
  std::string command;
  /// Coefficient file, rule file, or certificate (verify).
  std::string file;
  /// Inline rule descriptor.
  std::string rule;
  /// Comma-separated coefficients, low degree first (sturm, czds).
  std::string poly;
  /// czds multiplier: "theta" (2^-k^2) or "exp" (1/k!).
  std::string gamma = "theta";
  /// theta eval parameter a^2 (or a) and argument.
  std::string a2;
  std::string a;
  std::string x;
  Rational tol = Rational(1, 1000000000);
  long n_max = 20;
  long big_n = 10;
  int n = 2;
  int k_max = 3;
  Format format = Format::text;
  std::string out;
  int jobs = 1;
  /// Command line as given, for the metadata sidecar.
  std::vector<std::string> argv;
};

/// Validates budgets and tolerance; throws InputError.
void validate(const RunConfig& config);

/// Dispatches one command. Artifacts go to config.out (plus a
/// <out>.meta.json sidecar) or to `out`; diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments and runs; maps exceptions to exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpq::cli
