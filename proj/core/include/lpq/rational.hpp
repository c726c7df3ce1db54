#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lpq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal ("3.25", "-1e-3", "2.5E+2")
/// into an exact rational. Accepts U+2212 as a minus sign. Throws InputError.
Rational parse_rational(std::string_view text);

/// num/den in canonical form (gmpxx does not canonicalize on construction).
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q" (or "p" when the denominator is 1).
std::string to_fraction_string(const Rational& value);

/// Exact decimal expansion when the denominator is of the form 2^i 5^j and the
/// expansion has at most `max_digits` fractional digits; empty string otherwise.
std::string exact_decimal(const Rational& value, int max_digits = 40);

/// Integer power with a (possibly negative) exponent. 0^negative throws.
Rational pow(const Rational& base, long exponent);

/// Smallest integer >= value.
Integer ceil(const Rational& value);
/// Largest integer <= value.
Integer floor(const Rational& value);

Rational abs(const Rational& value);

/// Exact rational square root if one exists.
bool exact_sqrt(const Rational& value, Rational& root);

double to_double(const Rational& value);

}  // namespace lpq
