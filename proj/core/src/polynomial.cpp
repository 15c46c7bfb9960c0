#include "umbra/polynomial.hpp"

#include <algorithm>

namespace umbra {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::times_x() const {
  if (is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + 1);
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const Rational c = p.coefficient(static_cast<std::size_t>(k));
    if (sgn(c) == 0) continue;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace umbra
