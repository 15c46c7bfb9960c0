#include "umbra/rational.hpp"

#include <cctype>

#include "umbra/errors.hpp"

namespace umbra {
namespace {

// Optional sign followed by at least one decimal digit.
bool is_signed_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_signed_decimal(num) || !is_signed_decimal(den)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  const Integer d = parse_integer(den);
  if (d == 0) {
    throw ParseError("zero denominator: '" + std::string(text) + "'");
  }
  Rational value(parse_integer(num), d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational pow(const Rational& base, unsigned long exponent) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime; the sign lives in the numerator.
  return Rational(num, den);
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

bool rational_sqrt(const Rational& value, Rational& root) {
  if (sgn(value) < 0) return false;
  if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(value.get_den_mpz_t()) == 0) {
    return false;
  }
  Integer num;
  Integer den;
  mpz_sqrt(num.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value.get_den_mpz_t());
  root = Rational(num, den);
  return true;
}

}  // namespace umbra
