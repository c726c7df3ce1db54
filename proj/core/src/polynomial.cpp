#include "lpq/polynomial.hpp"

#include <sstream>

#include "lpq/errors.hpp"

namespace lpq {

RealPolynomial::RealPolynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  trim();
}

RealPolynomial RealPolynomial::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = c;
  return RealPolynomial(std::move(v));
}

RealPolynomial RealPolynomial::from_roots(const std::vector<Rational>& roots) {
  RealPolynomial p({Rational(1)});
  for (const auto& r : roots) {
    p *= RealPolynomial({Rational(-r), Rational(1)});
  }
  return p;
}

void RealPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) {
    c_.pop_back();
  }
}

Rational RealPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) {
    return Rational(0);
  }
  return c_[static_cast<std::size_t>(k)];
}

const Rational& RealPolynomial::leading() const {
  if (c_.empty()) {
    throw Error("leading coefficient of the zero polynomial");
  }
  return c_.back();
}

Rational RealPolynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

int RealPolynomial::sign_at(const Rational& x) const {
  // Homogeneous Horner: sum c_i p^i q^(d-i) has the sign of P(p/q) since q > 0.
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  if (c_.empty()) {
    return 0;
  }
  const auto ints = primitive_integer_coefficients(*this);
  Integer acc = ints.back();
  Integer qpow = 1;
  for (std::size_t i = ints.size() - 1; i-- > 0;) {
    qpow *= q;
    acc = acc * p + ints[i] * qpow;
  }
  return sgn(acc);
}

Interval RealPolynomial::operator()(const Interval& x) const {
  Interval acc = Interval::point(0L, x.precision());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * x + Interval::point(*it, x.precision());
  }
  return acc;
}

ComplexInterval RealPolynomial::operator()(const ComplexInterval& z) const {
  const Precision prec = z.re.precision();
  ComplexInterval acc{Interval(prec), Interval(prec)};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc.re += Interval::point(*it, prec);
  }
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (c_.size() <= 1) {
    return {};
  }
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) {
    d[k - 1] = c_[k] * static_cast<long>(k);
  }
  return RealPolynomial(std::move(d));
}

RealPolynomial RealPolynomial::scaled(const Rational& c) const {
  std::vector<Rational> out(c_);
  Rational power(1);
  for (auto& v : out) {
    v *= power;
    power *= c;
  }
  return RealPolynomial(std::move(out));
}

RealPolynomial RealPolynomial::reflected() const { return scaled(Rational(-1)); }

RealPolynomial RealPolynomial::monic() const {
  if (c_.empty()) {
    return {};
  }
  RealPolynomial r(*this);
  const Rational lc = leading();
  for (auto& v : r.c_) {
    v /= lc;
  }
  return r;
}

RealPolynomial RealPolynomial::termwise(const std::vector<Rational>& gamma) const {
  if (gamma.size() < c_.size()) {
    throw InputError("multiplier sequence shorter than degree + 1");
  }
  std::vector<Rational> out(c_);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] *= gamma[k];
  }
  return RealPolynomial(std::move(out));
}

RealPolynomial& RealPolynomial::operator+=(const RealPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) {
    c_.resize(rhs.c_.size(), Rational(0));
  }
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) {
    c_[k] += rhs.c_[k];
  }
  trim();
  return *this;
}

RealPolynomial& RealPolynomial::operator-=(const RealPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) {
    c_.resize(rhs.c_.size(), Rational(0));
  }
  for (std::size_t k = 0; k < rhs.c_.size(); ++k) {
    c_[k] -= rhs.c_[k];
  }
  trim();
  return *this;
}

RealPolynomial& RealPolynomial::operator*=(const RealPolynomial& rhs) {
  if (c_.empty() || rhs.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + rhs.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      out[i + j] += c_[i] * rhs.c_[j];
    }
  }
  c_ = std::move(out);
  trim();
  return *this;
}

RealPolynomial& RealPolynomial::operator*=(const Rational& rhs) {
  for (auto& v : c_) {
    v *= rhs;
  }
  trim();
  return *this;
}

std::pair<RealPolynomial, RealPolynomial> divmod(const RealPolynomial& a, const RealPolynomial& b) {
  if (b.is_zero()) {
    throw Error("polynomial division by zero");
  }
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) {
    return {RealPolynomial(), a};
  }
  std::vector<Rational> quo(static_cast<std::size_t>(da - db) + 1, Rational(0));
  const Rational& lc = b.leading();
  for (int k = da - db; k >= 0; --k) {
    const Rational f = rem[static_cast<std::size_t>(k + db)] / lc;
    quo[static_cast<std::size_t>(k)] = f;
    if (f == 0) {
      continue;
    }
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= f * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RealPolynomial(std::move(quo)), RealPolynomial(std::move(rem))};
}

RealPolynomial gcd(RealPolynomial a, RealPolynomial b) {
  while (!b.is_zero()) {
    RealPolynomial r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<std::pair<RealPolynomial, int>> squarefree_decomposition(const RealPolynomial& p) {
  // Yun's algorithm over Q.
  std::vector<std::pair<RealPolynomial, int>> out;
  if (p.degree() < 1) {
    return out;
  }
  const RealPolynomial dp = p.derivative();
  RealPolynomial a = gcd(p, dp);
  RealPolynomial b = divmod(p, a).first;
  RealPolynomial c = divmod(dp, a).first;
  RealPolynomial d = c - b.derivative();
  int i = 1;
  while (b.degree() >= 1) {
    a = gcd(b, d);
    if (a.degree() >= 1) {
      out.emplace_back(a.monic(), i);
    }
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::vector<Integer> primitive_integer_coefficients(const RealPolynomial& p) {
  Integer den = 1;
  for (const auto& v : p.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(p.coefficients().size());
  Integer content = 0;
  for (const auto& v : p.coefficients()) {
    Integer n = v.get_num() * (den / v.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (content > 1) {
    for (auto& v : out) {
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    }
  }
  return out;
}

std::string to_string(const RealPolynomial& p) {
  if (p.is_zero()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coefficient(k);
    if (c == 0) {
      continue;
    }
    if (!first) {
      os << (c < 0 ? " - " : " + ");
    } else if (c < 0) {
      os << "-";
    }
    first = false;
    os << to_fraction_string(abs(c));
    if (k == 1) {
      os << "*z";
    } else if (k > 1) {
      os << "*z^" << k;
    }
  }
  return os.str();
}

RealPolynomial parse_polynomial(const std::string& text) {
  std::string cleaned = text;
  for (char& ch : cleaned) {
    if (ch == ',' || ch == '[' || ch == ']') {
      ch = ' ';
    }
  }
  std::istringstream is(cleaned);
  std::vector<Rational> coeffs;
  std::string token;
  while (is >> token) {
    coeffs.push_back(parse_rational(token));
  }
  RealPolynomial p(std::move(coeffs));
  if (p.is_zero()) {
    throw InputError("zero polynomial");
  }
  return p;
}

}  // namespace lpq
