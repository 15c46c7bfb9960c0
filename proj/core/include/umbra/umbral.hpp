#pragma once

#include <cstddef>
#include <vector>

#include "umbra/delta_series.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Coordinates zeta_k of a formal series sum_k zeta_k p_k(x) in the basic
// polynomial basis of a delta operator on spacing h. Equality ignores
// trailing zeros, so a series does not depend on how much storage it carries.
struct UmbralSeries {
  std::vector<Rational> zeta;
  Rational h = 1;
  DeltaKind basis = DeltaKind::forward;

  static UmbralSeries basic(std::size_t k, const Rational& h = 1,
                            DeltaKind basis = DeltaKind::forward);

  bool is_zero() const;
  Rational coefficient(std::size_t k) const;

  UmbralSeries& operator+=(const UmbralSeries& other);
  UmbralSeries& operator-=(const UmbralSeries& other);
  UmbralSeries& operator*=(const Rational& scalar);

  friend UmbralSeries operator+(UmbralSeries a, const UmbralSeries& b) { return a += b; }
  friend UmbralSeries operator-(UmbralSeries a, const UmbralSeries& b) { return a -= b; }
  friend UmbralSeries operator*(UmbralSeries a, const Rational& c) { return a *= c; }
  friend UmbralSeries operator*(const Rational& c, UmbralSeries a) { return a *= c; }

  friend bool operator==(const UmbralSeries& a, const UmbralSeries& b);
};

// Samples u_n = u(nh) on the lattice x_n = nh, n = 0..values.size()-1.
struct LatticeFunction {
  std::vector<Rational> values;
  Rational h = 1;

  std::size_t n_max() const { return values.empty() ? 0 : values.size() - 1; }

  friend bool operator==(const LatticeFunction&, const LatticeFunction&) = default;
};

// p_n * p_m = p_{n+m}: the Cauchy product of the coefficient lists, kept up
// to degree `bound`. Throws IncompatibleError on a spacing or basis mismatch.
UmbralSeries star_multiply(const UmbralSeries& f, const UmbralSeries& g,
                           std::size_t bound = kDefaultTruncationBound);

// Action of the delta operator: zeta_{j-1} <- j zeta_j.
UmbralSeries delta_derive(const UmbralSeries& f);

// u_n = sum_{k<=n} h^k n!/(n-k)! zeta_k for n = 0..n_max. Only coefficients
// zeta_0..zeta_n reach u_n because p_k vanishes at x_0..x_{k-1}.
// Throws NotImplementedError for any basis other than forward.
LatticeFunction values_from_coeffs(const UmbralSeries& f, std::size_t n_max);

// Same, with n_max = zeta.size() - 1.
LatticeFunction values_from_coeffs(const UmbralSeries& f);

// Value at an arbitrary point x, which must be a lattice point nh with
// n >= 0; off the lattice the formal series need not converge.
// Throws LatticeMismatchError otherwise.
Rational evaluate_on_lattice(const UmbralSeries& f, const Rational& x);

// zeta_k = h^-k sum_{j<=k} (-1)^(k-j) u_j / (j!(k-j)!), the exact inverse of
// values_from_coeffs on the forward basis.
UmbralSeries coeffs_from_values(const LatticeFunction& u);

// delta(f*g) - (delta f)*g - f*(delta g), compared up to degree bound-1.
// Zero for every pair: the delta operator is a derivation of the star product.
UmbralSeries leibniz_residual(const UmbralSeries& f, const UmbralSeries& g,
                              std::size_t bound = kDefaultTruncationBound);

}  // namespace umbra
