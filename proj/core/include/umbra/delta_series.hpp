#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "umbra/polynomial.hpp"
#include "umbra/rational.hpp"

namespace umbra {

inline constexpr std::size_t kDefaultTruncationBound = 64;

enum class DeltaKind { derivative, forward, backward, symmetric };

std::string_view to_string(DeltaKind kind);
std::optional<DeltaKind> parse_delta_kind(std::string_view name);

// A shift-invariant operator written as a truncated series sum_k q_k D^k in
// the continuous derivative D. On polynomials of degree <= order_bound() the
// truncation is invisible: D^(N+1) annihilates them, so the action is exact.
//
// h is the lattice spacing the operator was built for. It is carried along
// so that operators from different lattices are not mixed by accident.
class DeltaSeries {
 public:
  // Coefficients beyond index order_bound are dropped, missing ones are zero.
  DeltaSeries(std::vector<Rational> coefficients, Rational h, std::size_t order_bound);

  std::size_t order_bound() const { return coeffs_.size() - 1; }
  const Rational& h() const { return h_; }
  std::span<const Rational> coefficients() const { return coeffs_; }
  const Rational& coefficient(std::size_t k) const { return coeffs_.at(k); }

  // q_0 = 0 and q_1 != 0: no constant term, and Q x = q_1 is a nonzero constant.
  bool is_delta() const;

  // Same series re-truncated at a smaller order bound.
  DeltaSeries truncated(std::size_t order_bound) const;

  DeltaSeries& operator+=(const DeltaSeries& other);
  DeltaSeries& operator-=(const DeltaSeries& other);
  DeltaSeries& operator*=(const Rational& scalar);

  friend DeltaSeries operator+(DeltaSeries lhs, const DeltaSeries& rhs) { return lhs += rhs; }
  friend DeltaSeries operator-(DeltaSeries lhs, const DeltaSeries& rhs) { return lhs -= rhs; }
  friend DeltaSeries operator*(DeltaSeries s, const Rational& c) { return s *= c; }
  friend DeltaSeries operator*(const Rational& c, DeltaSeries s) { return s *= c; }

  // Operator composition. Series in D commute, so this is the Cauchy
  // product, truncated at the smaller of the two order bounds.
  friend DeltaSeries operator*(const DeltaSeries& lhs, const DeltaSeries& rhs);

  friend bool operator==(const DeltaSeries& lhs, const DeltaSeries& rhs) = default;

 private:
  std::vector<Rational> coeffs_;
  Rational h_;
};

// Built-in delta operators, normalized by the spacing:
//   forward    (T_h - 1)/h
//   backward   (1 - T_h^-1)/h
//   symmetric  (T_h - T_h^-1)/(2h)
//   derivative D
// Throws BoundError if order_bound == 0 and DomainError if h <= 0.
DeltaSeries make_delta(DeltaKind kind, const Rational& h, std::size_t order_bound);

// T_h^power = exp(power*h*D) for power = +1 or -1.
DeltaSeries shift_series(const Rational& h, std::size_t order_bound, int power = 1);

DeltaSeries identity_series(const Rational& h, std::size_t order_bound);

// sum_k q_k D^k p. Throws BoundError if deg p > order_bound(op).
Polynomial apply_operator(const DeltaSeries& op, const Polynomial& p);

// [U, x] = U x - x U. Since [D^k, x] = k D^(k-1), the coefficients shift down
// by one with weight k, and the order bound drops by one.
DeltaSeries pincherle(const DeltaSeries& op);

// Multiplicative inverse as a truncated series. Throws NonInvertibleError
// when q_0 == 0.
DeltaSeries invert_series(const DeltaSeries& op);

// beta = (Q')^-1, the operator for which [Q, x beta] = 1.
DeltaSeries beta_operator(const DeltaSeries& q);

// [Q, x beta] p = Q(x beta p) - x beta (Q p). The identity on polynomials
// of degree <= order_bound(Q) - 1.
Polynomial heisenberg_weyl_commutator(const DeltaSeries& q, const Polynomial& p);

}  // namespace umbra
