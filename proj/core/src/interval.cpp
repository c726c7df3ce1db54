#include "lpq/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>
#include <vector>

#include "lpq/errors.hpp"

namespace lpq {
namespace {

Rational mpfr_to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x) != 0) {
    return Rational(0);
  }
  if (mpfr_number_p(x) == 0) {
    throw PrecisionError("non-finite interval endpoint");
  }
  Integer mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), x);
  Rational r(mantissa);
  if (e > 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else if (e < 0) {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return r;
}

void set_rational(mpfr_ptr dst, const Rational& value, mpfr_rnd_t rnd) {
  mpfr_set_q(dst, value.get_mpq_t(), rnd);
}

}  // namespace

Interval::Interval(Precision prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.precision());
    mpfr_set_prec(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::point(long value, Precision prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, value, MPFR_RNDD);
  mpfr_set_si(r.hi_, value, MPFR_RNDU);
  return r;
}

Interval Interval::point(const Rational& value, Precision prec) {
  Interval r(prec);
  set_rational(r.lo_, value, MPFR_RNDD);
  set_rational(r.hi_, value, MPFR_RNDU);
  return r;
}

Interval Interval::point(double value, Precision prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, value, MPFR_RNDD);
  mpfr_set_d(r.hi_, value, MPFR_RNDU);
  return r;
}

Interval Interval::bounds(const Rational& lo, const Rational& hi, Precision prec) {
  if (hi < lo) {
    throw Error("interval bounds out of order");
  }
  Interval r(prec);
  set_rational(r.lo_, lo, MPFR_RNDD);
  set_rational(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::symmetric(const Interval& radius) {
  Interval r(radius.precision());
  mpfr_neg(r.lo_, radius.hi_, MPFR_RNDD);
  mpfr_set(r.hi_, radius.hi_, MPFR_RNDU);
  if (mpfr_sgn(r.hi_) < 0) {
    throw Error("negative radius");
  }
  return r;
}

Interval Interval::pi(Precision prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::mid_double() const {
  mpfr_t m;
  mpfr_init2(m, precision() + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  const double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

Rational Interval::lower_rational() const { return mpfr_to_rational(lo_); }
Rational Interval::upper_rational() const { return mpfr_to_rational(hi_); }

Rational Interval::mid_rational() const {
  Rational m = (lower_rational() + upper_rational()) / 2;
  return m;
}

Interval Interval::width() const {
  Interval r(precision());
  mpfr_sub(r.lo_, hi_, lo_, MPFR_RNDU);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDU);
  mpfr_set_zero(r.lo_, 1);
  return r;
}

double Interval::width_upper() const { return width().upper_double(); }

Interval Interval::magnitude() const {
  Interval r(precision());
  mpfr_t a;
  mpfr_init2(a, precision());
  mpfr_abs(a, lo_, MPFR_RNDU);
  mpfr_abs(r.hi_, hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, a, MPFR_RNDU);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
  mpfr_clear(a);
  return r;
}

Interval Interval::mignitude() const {
  Interval r(precision());
  if (!contains_zero()) {
    if (mpfr_sgn(lo_) > 0) {
      mpfr_set(r.lo_, lo_, MPFR_RNDD);
    } else {
      mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    }
  }
  mpfr_set(r.hi_, r.lo_, MPFR_RNDU);
  return r;
}

bool Interval::contains(const Rational& value) const {
  return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& inner) const {
  return mpfr_lessequal_p(lo_, inner.lo_) != 0 && mpfr_greaterequal_p(hi_, inner.hi_) != 0;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::intersects(const Interval& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) != 0 && mpfr_lessequal_p(other.lo_, hi_) != 0;
}

bool Interval::certainly_less(const Interval& other) const {
  return mpfr_less_p(hi_, other.lo_) != 0;
}

bool Interval::certainly_less_equal(const Interval& other) const {
  return mpfr_lessequal_p(hi_, other.lo_) != 0;
}

Interval Interval::with_precision(Precision prec) const {
  Interval r(prec);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::widened(const Interval& radius) const {
  Interval r(std::max(precision(), radius.precision()));
  mpfr_t m;
  mpfr_init2(m, radius.precision());
  mpfr_abs(m, radius.hi_, MPFR_RNDU);
  mpfr_sub(r.lo_, lo_, m, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, m, MPFR_RNDU);
  mpfr_clear(m);
  return r;
}

namespace {

void grow_to(mpfr_ptr lo, mpfr_ptr hi, Precision prec) {
  if (mpfr_get_prec(lo) < prec) {
    mpfr_prec_round(lo, prec, MPFR_RNDD);
    mpfr_prec_round(hi, prec, MPFR_RNDU);
  }
}

}  // namespace

Interval& Interval::operator+=(const Interval& rhs) {
  grow_to(lo_, hi_, rhs.precision());
  mpfr_add(lo_, lo_, rhs.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, rhs.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& rhs) {
  grow_to(lo_, hi_, rhs.precision());
  // Use a temporary for hi because rhs may alias *this.
  mpfr_t lo;
  mpfr_init2(lo, precision());
  mpfr_sub(lo, lo_, rhs.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, rhs.lo_, MPFR_RNDU);
  mpfr_swap(lo, lo_);
  mpfr_clear(lo);
  return *this;
}

Interval& Interval::operator*=(const Interval& rhs) {
  const Precision prec = std::max(precision(), rhs.precision());
  mpfr_t p[4];
  mpfr_t lo;
  mpfr_t hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  for (auto& v : p) {
    mpfr_init2(v, prec);
  }
  mpfr_srcptr a[2] = {lo_, hi_};
  mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
  int k = 0;
  for (auto* x : a) {
    for (auto* y : b) {
      mpfr_mul(p[k++], x, y, MPFR_RNDD);
    }
  }
  mpfr_min(lo, p[0], p[1], MPFR_RNDD);
  mpfr_min(lo, lo, p[2], MPFR_RNDD);
  mpfr_min(lo, lo, p[3], MPFR_RNDD);
  k = 0;
  for (auto* x : a) {
    for (auto* y : b) {
      mpfr_mul(p[k++], x, y, MPFR_RNDU);
    }
  }
  mpfr_max(hi, p[0], p[1], MPFR_RNDU);
  mpfr_max(hi, hi, p[2], MPFR_RNDU);
  mpfr_max(hi, hi, p[3], MPFR_RNDU);
  mpfr_swap(lo, lo_);
  mpfr_swap(hi, hi_);
  mpfr_clear(lo);
  mpfr_clear(hi);
  for (auto& v : p) {
    mpfr_clear(v);
  }
  return *this;
}

Interval& Interval::operator/=(const Interval& rhs) {
  if (rhs.contains_zero()) {
    throw PrecisionError("interval division by an enclosure of zero");
  }
  const Precision prec = std::max(precision(), rhs.precision());
  Interval inv(prec);
  mpfr_ui_div(inv.lo_, 1, rhs.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, rhs.lo_, MPFR_RNDU);
  return *this *= inv;
}

Interval operator-(const Interval& x) {
  Interval r(x.precision());
  mpfr_neg(r.lo_, x.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
  return r;
}

Interval sqr(const Interval& x) {
  Interval r(x.precision());
  if (x.contains_zero()) {
    mpfr_t a;
    mpfr_init2(a, x.precision());
    mpfr_sqr(a, x.lo_, MPFR_RNDU);
    mpfr_sqr(r.hi_, x.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, a, MPFR_RNDU);
    mpfr_set_zero(r.lo_, 1);
    mpfr_clear(a);
  } else if (x.certainly_positive()) {
    mpfr_sqr(r.lo_, x.lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, x.hi_, MPFR_RNDU);
  } else {
    mpfr_sqr(r.lo_, x.hi_, MPFR_RNDD);
    mpfr_sqr(r.hi_, x.lo_, MPFR_RNDU);
  }
  return r;
}

Interval pow(const Interval& x, unsigned long exponent) {
  Interval result = Interval::point(1L, x.precision());
  Interval base = x;
  // Even powers through sqr keep tight enclosures around zero.
  while (exponent > 0) {
    if ((exponent & 1UL) != 0) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = sqr(base);
    }
  }
  return result;
}

Interval pow(const Interval& x, long exponent) {
  if (exponent >= 0) {
    return pow(x, static_cast<unsigned long>(exponent));
  }
  return Interval::point(1L, x.precision()) / pow(x, static_cast<unsigned long>(-exponent));
}

Interval sqrt(const Interval& x) {
  if (x.certainly_negative()) {
    throw Error("square root of a negative interval");
  }
  Interval r(x.precision());
  if (mpfr_sgn(x.lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Interval abs(const Interval& x) {
  if (x.certainly_nonnegative()) {
    return x;
  }
  if (x.certainly_nonpositive()) {
    return -x;
  }
  Interval r(x.precision());
  mpfr_t a;
  mpfr_init2(a, x.precision());
  mpfr_neg(a, x.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, a, x.hi_, MPFR_RNDU);
  mpfr_set_zero(r.lo_, 1);
  mpfr_clear(a);
  return r;
}

Interval mul_2si(const Interval& x, long e) {
  Interval r(x.precision());
  mpfr_mul_2si(r.lo_, x.lo_, e, MPFR_RNDD);
  mpfr_mul_2si(r.hi_, x.hi_, e, MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

ComplexInterval ComplexInterval::point(const Rational& re, const Rational& im, Precision prec) {
  return {Interval::point(re, prec), Interval::point(im, prec)};
}

ComplexInterval& ComplexInterval::operator+=(const ComplexInterval& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

ComplexInterval& ComplexInterval::operator-=(const ComplexInterval& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

ComplexInterval& ComplexInterval::operator*=(const ComplexInterval& rhs) {
  Interval new_re = re * rhs.re - im * rhs.im;
  Interval new_im = re * rhs.im + im * rhs.re;
  re = std::move(new_re);
  im = std::move(new_im);
  return *this;
}

ComplexInterval& ComplexInterval::operator*=(const Interval& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Interval ComplexInterval::norm() const { return sqr(re) + sqr(im); }

Interval ComplexInterval::modulus() const { return sqrt(norm()); }

std::string format_interval(const Interval& x, int digits) {
  const Precision prec = std::max<Precision>(x.precision(), 64) + 8;
  mpfr_t mid;
  mpfr_init2(mid, prec);
  mpfr_add(mid, x.lower(), x.upper(), MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);

  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*RNe", digits - 1, mid);
  std::string mid_text(buf.data());
  mpfr_clear(mid);

  // Radius: max distance from the printed midpoint to either endpoint, rounded up.
  const Rational printed = parse_rational(mid_text);
  Rational rad = std::max(abs(printed - x.lower_rational()), abs(x.upper_rational() - printed));
  if (rad == 0) {
    return mid_text + " ± 0";
  }
  mpfr_t r;
  mpfr_init2(r, 16);
  mpfr_set_q(r, rad.get_mpq_t(), MPFR_RNDU);
  mpfr_snprintf(buf.data(), buf.size(), "%.1RUe", r);
  mpfr_clear(r);
  return mid_text + " ± " + std::string(buf.data());
}

Interval parse_interval(const std::string& text, Precision prec) {
  std::string mid_text = text;
  std::string rad_text = "0";
  for (const std::string sep : {"±", "+-", "+/-"}) {
    if (auto pos = text.find(sep); pos != std::string::npos) {
      mid_text = text.substr(0, pos);
      rad_text = text.substr(pos + sep.size());
      break;
    }
  }
  const Rational mid = parse_rational(mid_text);
  const Rational rad = parse_rational(rad_text);
  if (rad < 0) {
    throw InputError("negative error radius in '" + text + "'");
  }
  return Interval::bounds(mid - rad, mid + rad, prec);
}

std::string format_rational(const Rational& value, int digits) {
  if (std::string exact = exact_decimal(value); !exact.empty()) {
    return exact + " ± 0";
  }
  const Precision prec = static_cast<Precision>(digits * 4 + 64);
  return format_interval(Interval::point(value, prec), digits);
}

}  // namespace lpq
