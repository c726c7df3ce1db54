#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpq/interval.hpp"
#include "lpq/rational.hpp"

namespace lpq {

/// Polynomial with exact rational coefficients, stored low degree first.
/// Trailing zeros are stripped; the zero polynomial has degree -1.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<Rational> coefficients);
  static RealPolynomial monomial(const Rational& c, int k);
  /// Product of (z - r) over the given roots.
  static RealPolynomial from_roots(const std::vector<Rational>& roots);

  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }
  /// Zero outside 0..degree.
  [[nodiscard]] Rational coefficient(int k) const;
  [[nodiscard]] const Rational& leading() const;

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] int sign_at(const Rational& x) const;
  [[nodiscard]] Interval operator()(const Interval& x) const;
  [[nodiscard]] ComplexInterval operator()(const ComplexInterval& z) const;

  [[nodiscard]] RealPolynomial derivative() const;
  /// P(c z).
  [[nodiscard]] RealPolynomial scaled(const Rational& c) const;
  /// P(-z).
  [[nodiscard]] RealPolynomial reflected() const;
  [[nodiscard]] RealPolynomial monic() const;
  /// Coefficients multiplied termwise by gamma_0..gamma_d.
  [[nodiscard]] RealPolynomial termwise(const std::vector<Rational>& gamma) const;

  RealPolynomial& operator+=(const RealPolynomial& rhs);
  RealPolynomial& operator-=(const RealPolynomial& rhs);
  RealPolynomial& operator*=(const RealPolynomial& rhs);
  RealPolynomial& operator*=(const Rational& rhs);

  friend RealPolynomial operator+(RealPolynomial a, const RealPolynomial& b) { return a += b; }
  friend RealPolynomial operator-(RealPolynomial a, const RealPolynomial& b) { return a -= b; }
  friend RealPolynomial operator*(RealPolynomial a, const RealPolynomial& b) { return a *= b; }
  friend RealPolynomial operator*(RealPolynomial a, const Rational& b) { return a *= b; }
  friend bool operator==(const RealPolynomial& a, const RealPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division; throws on a zero divisor.
std::pair<RealPolynomial, RealPolynomial> divmod(const RealPolynomial& a, const RealPolynomial& b);
/// Monic gcd (zero when both inputs are zero).
RealPolynomial gcd(RealPolynomial a, RealPolynomial b);

/// Square-free factors f_i with P = lc * prod f_i^i; entries are (f_i, i) for
/// nonconstant f_i only.
std::vector<std::pair<RealPolynomial, int>> squarefree_decomposition(const RealPolynomial& p);

/// Scales to integer coefficients with positive content 1 and the sign of the
/// leading coefficient kept.
std::vector<Integer> primitive_integer_coefficients(const RealPolynomial& p);

/// "c0 + c1*z + ..." with exact fractions.
std::string to_string(const RealPolynomial& p);

/// Parses a comma- or space-separated coefficient list, low degree first.
RealPolynomial parse_polynomial(const std::string& text);

}  // namespace lpq
