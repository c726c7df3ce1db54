#pragma once

#include <string>
#include <vector>

#include "lpq/polynomial.hpp"

namespace lpq {

/// Interval endpoint: a rational or one of the infinities.
struct Endpoint {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind = Kind::finite;
  Rational value;

  static Endpoint neg_inf() { return {Kind::neg_inf, Rational(0)}; }
  static Endpoint pos_inf() { return {Kind::pos_inf, Rational(0)}; }
  static Endpoint at(const Rational& v) { return {Kind::finite, v}; }
};

/// Sturm chain of the square-free part of P over primitive integer
/// pseudo-remainders. count(lo, hi) is the number of distinct real roots of
/// P in (lo, hi].
class SturmChain {
 public:
  explicit SturmChain(const RealPolynomial& p);

  [[nodiscard]] int variations(const Endpoint& x) const;
  [[nodiscard]] int count(const Endpoint& lo, const Endpoint& hi) const;
  [[nodiscard]] std::size_t length() const { return chain_.size(); }

 private:
  std::vector<std::vector<Integer>> chain_;
};

int sturm_count(const RealPolynomial& p, const Endpoint& lo, const Endpoint& hi);

/// Real roots counted with multiplicity.
int real_root_count(const RealPolynomial& p);

/// Isolating interval (lo, hi]; lo == hi marks an exactly located root.
struct RootBracket {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
};

struct HyperbolicityReport {
  int degree = 0;
  int real_root_count = 0;
  int z_c = 0;
  std::vector<RootBracket> brackets;
  bool all_negative = false;
  bool all_nonpositive = false;
  bool all_simple = false;
  std::string method = "exact-sturm";

  [[nodiscard]] bool real_rooted() const { return z_c == 0; }
};

/// Brackets are disjoint, sorted, and no wider than `width` (unless exact).
HyperbolicityReport hyperbolicity_report(const RealPolynomial& p,
                                         const Rational& width = Rational(1, 1 << 20));

struct CzdsResult {
  int z_c_before = 0;
  int z_c_after = 0;
  bool satisfied = false;
};

/// Compares Z_c of P and of sum gamma_k c_k z^k.
CzdsResult czds_check(const std::vector<Rational>& gamma, const RealPolynomial& p);

}  // namespace lpq
