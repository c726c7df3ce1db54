#include "lpq/rational.hpp"

#include <algorithm>
#include <cctype>

#include "lpq/errors.hpp"

namespace lpq {
namespace {

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
      continue;
    }
    out.push_back(text[i]);
  }
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
           return std::isdigit(static_cast<unsigned char>(c)) != 0;
         });
}

Integer parse_integer(std::string_view s, std::string_view original) {
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw InputError("not a number: '" + std::string(original) + "'");
  }
  Integer value(std::string(body), 10);
  return negative ? Integer(-value) : value;
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw InputError("zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view raw) {
  std::string text = normalize_minus(raw);
  auto first = text.find_first_not_of(" \t\r\n");
  auto last = text.find_last_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw InputError("empty numeric literal");
  }
  text = text.substr(first, last - first + 1);

  if (auto slash = text.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(std::string_view(text).substr(0, slash), raw);
    Integer den = parse_integer(std::string_view(text).substr(slash + 1), raw);
    if (den == 0) {
      throw InputError("zero denominator in '" + std::string(raw) + "'");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  std::string_view body(text);
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    Integer ex = parse_integer(body.substr(e + 1), raw);
    if (!ex.fits_slong_p() || abs(ex) > 100000) {
      throw InputError("exponent out of range in '" + std::string(raw) + "'");
    }
    exponent = ex.get_si();
    body = body.substr(0, e);
  }
  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw InputError("not a number: '" + std::string(raw) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(body)) {
      throw InputError("not a number: '" + std::string(raw) + "'");
    }
    digits = std::string(body);
  }
  Rational q{Integer(digits, 10)};
  if (exponent > 0) {
    q *= pow10(static_cast<unsigned long>(exponent));
  } else if (exponent < 0) {
    q /= pow10(static_cast<unsigned long>(-exponent));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_fraction_string(const Rational& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string exact_decimal(const Rational& value, int max_digits) {
  Integer den = value.get_den();
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2) != 0) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5) != 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) {
    return {};
  }
  const int places = std::max(twos, fives);
  if (places > max_digits) {
    return {};
  }
  Integer scaled = value.get_num() * pow10(static_cast<unsigned long>(places)) / value.get_den();
  const bool negative = scaled < 0;
  std::string digits = Integer(negative ? Integer(-scaled) : scaled).get_str();
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places) {
      digits.insert(0, static_cast<std::size_t>(places - static_cast<int>(digits.size()) + 1), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  return negative ? "-" + digits : digits;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) {
      throw InputError("zero raised to a negative power");
    }
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  r.canonicalize();
  return r;
}

Integer ceil(const Rational& value) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

Integer floor(const Rational& value) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

bool exact_sqrt(const Rational& value, Rational& root) {
  if (value < 0) {
    return false;
  }
  if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(value.get_den_mpz_t()) == 0) {
    return false;
  }
  Integer n;
  Integer d;
  mpz_sqrt(n.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), value.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace lpq
