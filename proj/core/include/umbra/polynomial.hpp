#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "umbra/rational.hpp"

namespace umbra {

// Dense univariate polynomial with exact rational coefficients, indexed by
// monomial degree. The highest stored coefficient is always nonzero; the zero
// polynomial stores nothing and has degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(std::size_t degree, const Rational& c = 1);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Zero beyond the stored degree.
  Rational coefficient(std::size_t k) const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial times_x() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

// Human-readable form such as "x^3 - 1/2*x + 1".
std::string to_string(const Polynomial& p);

}  // namespace umbra
