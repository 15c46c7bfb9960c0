#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace umbra {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p/q" or a plain integer literal, with an optional leading sign on
// either part. The result is canonical (lowest terms, positive denominator).
// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" text. The denominator is always written, so 2 is "2/1".
std::string to_string(const Rational& value);

Rational pow(const Rational& base, unsigned long exponent);

// True when value is an integer (denominator 1).
bool is_integer(const Rational& value);

// Exact square root if value is the square of a rational.
bool rational_sqrt(const Rational& value, Rational& root);

}  // namespace umbra
