#pragma once

#include <mpfr.h>

#include <string>

#include "lpq/rational.hpp"

namespace lpq {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;
inline constexpr Precision kPrecisionCap = 4096;

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
/// lower endpoint down and the upper endpoint up, so the result encloses the
/// exact image of the operands. Results take the larger operand precision.
class Interval {
 public:
  explicit Interval(Precision prec = kDefaultPrecision);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval point(long value, Precision prec = kDefaultPrecision);
  static Interval point(const Rational& value, Precision prec = kDefaultPrecision);
  /// Encloses `value`, which is assumed exact (e.g. a mesh coordinate).
  static Interval point(double value, Precision prec = kDefaultPrecision);
  static Interval bounds(const Rational& lo, const Rational& hi, Precision prec = kDefaultPrecision);
  static Interval hull(const Interval& a, const Interval& b);
  /// [-r, r] for r >= 0.
  static Interval symmetric(const Interval& radius);
  static Interval pi(Precision prec = kDefaultPrecision);

  [[nodiscard]] Precision precision() const { return mpfr_get_prec(lo_); }
  [[nodiscard]] mpfr_srcptr lower() const { return lo_; }
  [[nodiscard]] mpfr_srcptr upper() const { return hi_; }

  [[nodiscard]] double lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  [[nodiscard]] double upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  [[nodiscard]] double mid_double() const;
  [[nodiscard]] Rational lower_rational() const;
  [[nodiscard]] Rational upper_rational() const;
  /// A representable point inside the interval (rounded midpoint).
  [[nodiscard]] Rational mid_rational() const;
  /// Upper bound on hi - lo.
  [[nodiscard]] Interval width() const;
  [[nodiscard]] double width_upper() const;
  /// Upper bound on |x| over the interval (as an interval point).
  [[nodiscard]] Interval magnitude() const;
  /// Lower bound on |x| over the interval (as an interval point).
  [[nodiscard]] Interval mignitude() const;

  [[nodiscard]] bool contains(const Rational& value) const;
  [[nodiscard]] bool contains(const Interval& inner) const;
  [[nodiscard]] bool contains_zero() const;
  [[nodiscard]] bool intersects(const Interval& other) const;
  [[nodiscard]] bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  [[nodiscard]] bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
  [[nodiscard]] bool certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }
  [[nodiscard]] bool certainly_nonpositive() const { return mpfr_sgn(hi_) <= 0; }
  /// hi < other.lo
  [[nodiscard]] bool certainly_less(const Interval& other) const;
  [[nodiscard]] bool certainly_less_equal(const Interval& other) const;

  /// Re-rounds outward to `prec` bits.
  [[nodiscard]] Interval with_precision(Precision prec) const;
  [[nodiscard]] Interval widened(const Interval& radius) const;

  Interval& operator+=(const Interval& rhs);
  Interval& operator-=(const Interval& rhs);
  Interval& operator*=(const Interval& rhs);
  Interval& operator/=(const Interval& rhs);

  friend Interval operator+(Interval lhs, const Interval& rhs) { return lhs += rhs; }
  friend Interval operator-(Interval lhs, const Interval& rhs) { return lhs -= rhs; }
  friend Interval operator*(Interval lhs, const Interval& rhs) { return lhs *= rhs; }
  friend Interval operator/(Interval lhs, const Interval& rhs) { return lhs /= rhs; }
  friend Interval operator-(const Interval& x);

  friend Interval sqr(const Interval& x);
  friend Interval pow(const Interval& x, unsigned long exponent);
  friend Interval sqrt(const Interval& x);
  friend Interval abs(const Interval& x);
  friend Interval mul_2si(const Interval& x, long e);
  friend Interval max(const Interval& a, const Interval& b);

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

Interval sqr(const Interval& x);
Interval pow(const Interval& x, unsigned long exponent);
/// x^e for integer e (negative exponents require 0 not in x).
Interval pow(const Interval& x, long exponent);
Interval sqrt(const Interval& x);
Interval abs(const Interval& x);
Interval mul_2si(const Interval& x, long e);
Interval max(const Interval& a, const Interval& b);

/// Rectangular complex interval.
struct ComplexInterval {
  Interval re;
  Interval im;

  static ComplexInterval point(const Rational& re, const Rational& im, Precision prec);

  ComplexInterval& operator+=(const ComplexInterval& rhs);
  ComplexInterval& operator-=(const ComplexInterval& rhs);
  ComplexInterval& operator*=(const ComplexInterval& rhs);
  ComplexInterval& operator*=(const Interval& rhs);

  friend ComplexInterval operator+(ComplexInterval a, const ComplexInterval& b) { return a += b; }
  friend ComplexInterval operator-(ComplexInterval a, const ComplexInterval& b) { return a -= b; }
  friend ComplexInterval operator*(ComplexInterval a, const ComplexInterval& b) { return a *= b; }

  /// Enclosure of |z|^2.
  [[nodiscard]] Interval norm() const;
  /// Enclosure of |z|.
  [[nodiscard]] Interval modulus() const;
};

/// "mid ± rad" with `digits` significant digits in the midpoint and the radius
/// rounded up so that [mid - rad, mid + rad] contains the interval.
std::string format_interval(const Interval& x, int digits = 20);
/// Parses "mid ± rad", "mid +- rad", or a bare number (radius 0).
Interval parse_interval(const std::string& text, Precision prec = kDefaultPrecision);
/// Exact rationals print exactly ("3.1 ± 0") when they have a short decimal
/// expansion; otherwise through an enclosure at `digits` digits.
std::string format_rational(const Rational& value, int digits = 30);

}  // namespace lpq
