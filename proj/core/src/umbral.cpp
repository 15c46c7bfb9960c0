#include "umbra/umbral.hpp"

#include <algorithm>
#include <string>

#include "umbra/combinatorics.hpp"
#include "umbra/errors.hpp"

namespace umbra {
namespace {

void require_compatible(const UmbralSeries& f, const UmbralSeries& g) {
  if (f.h != g.h) {
    throw IncompatibleError("series on spacings " + to_string(f.h) + " and " + to_string(g.h));
  }
  if (f.basis != g.basis) {
    throw IncompatibleError("series in " + std::string(to_string(f.basis)) + " and " +
                            std::string(to_string(g.basis)) + " bases");
  }
}

void require_forward(DeltaKind basis) {
  if (basis != DeltaKind::forward) {
    throw NotImplementedError("lattice evaluation is only defined for the forward basis, not " +
                              std::string(to_string(basis)));
  }
}

std::size_t significant_length(const std::vector<Rational>& v) {
  std::size_t n = v.size();
  while (n > 0 && sgn(v[n - 1]) == 0) --n;
  return n;
}

}  // namespace

UmbralSeries UmbralSeries::basic(std::size_t k, const Rational& h, DeltaKind basis) {
  UmbralSeries s{std::vector<Rational>(k + 1), h, basis};
  s.zeta[k] = 1;
  return s;
}

bool UmbralSeries::is_zero() const { return significant_length(zeta) == 0; }

Rational UmbralSeries::coefficient(std::size_t k) const {
  return k < zeta.size() ? zeta[k] : Rational(0);
}

UmbralSeries& UmbralSeries::operator+=(const UmbralSeries& other) {
  require_compatible(*this, other);
  zeta.resize(std::max(zeta.size(), other.zeta.size()));
  for (std::size_t k = 0; k < other.zeta.size(); ++k) zeta[k] += other.zeta[k];
  return *this;
}

UmbralSeries& UmbralSeries::operator-=(const UmbralSeries& other) {
  require_compatible(*this, other);
  zeta.resize(std::max(zeta.size(), other.zeta.size()));
  for (std::size_t k = 0; k < other.zeta.size(); ++k) zeta[k] -= other.zeta[k];
  return *this;
}

UmbralSeries& UmbralSeries::operator*=(const Rational& scalar) {
  for (auto& z : zeta) z *= scalar;
  return *this;
}

bool operator==(const UmbralSeries& a, const UmbralSeries& b) {
  if (a.h != b.h || a.basis != b.basis) return false;
  const std::size_t n = significant_length(a.zeta);
  if (n != significant_length(b.zeta)) return false;
  return std::equal(a.zeta.begin(), a.zeta.begin() + n, b.zeta.begin());
}

UmbralSeries star_multiply(const UmbralSeries& f, const UmbralSeries& g, std::size_t bound) {
  require_compatible(f, g);
  const std::size_t lf = significant_length(f.zeta);
  const std::size_t lg = significant_length(g.zeta);
  UmbralSeries out{{}, f.h, f.basis};
  if (lf == 0 || lg == 0) return out;
  out.zeta.resize(std::min(lf + lg - 1, bound + 1));
  for (std::size_t i = 0; i < lf && i < out.zeta.size(); ++i) {
    if (sgn(f.zeta[i]) == 0) continue;
    for (std::size_t j = 0; j < lg && i + j < out.zeta.size(); ++j) {
      out.zeta[i + j] += f.zeta[i] * g.zeta[j];
    }
  }
  return out;
}

UmbralSeries delta_derive(const UmbralSeries& f) {
  UmbralSeries out{{}, f.h, f.basis};
  if (f.zeta.size() <= 1) return out;
  out.zeta.resize(f.zeta.size() - 1);
  for (std::size_t j = 1; j < f.zeta.size(); ++j) {
    out.zeta[j - 1] = f.zeta[j] * static_cast<unsigned long>(j);
  }
  return out;
}

LatticeFunction values_from_coeffs(const UmbralSeries& f, std::size_t n_max) {
  require_forward(f.basis);
  LatticeFunction u{std::vector<Rational>(n_max + 1), f.h};
  const std::size_t len = significant_length(f.zeta);
  // h^k zeta_k, shared by every lattice point.
  std::vector<Rational> scaled(len);
  Rational hk = 1;
  for (std::size_t k = 0; k < len; ++k) {
    scaled[k] = hk * f.zeta[k];
    hk *= f.h;
  }
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational acc = 0;
    Integer falling = 1;  // n!/(n-k)!
    for (std::size_t k = 0; k <= n && k < len; ++k) {
      if (k > 0) falling *= static_cast<unsigned long>(n - k + 1);
      if (sgn(scaled[k]) != 0) acc += scaled[k] * falling;
    }
    u.values[n] = acc;
  }
  return u;
}

LatticeFunction values_from_coeffs(const UmbralSeries& f) {
  return values_from_coeffs(f, f.zeta.empty() ? 0 : f.zeta.size() - 1);
}

Rational evaluate_on_lattice(const UmbralSeries& f, const Rational& x) {
  require_forward(f.basis);
  const Rational n = x / f.h;
  if (!is_integer(n) || sgn(n) < 0) {
    throw LatticeMismatchError(to_string(x) + " is not a lattice point of spacing " +
                               to_string(f.h));
  }
  if (!n.get_num().fits_ulong_p()) throw BoundError("lattice index too large");
  const std::size_t index = n.get_num().get_ui();
  return values_from_coeffs(f, index).values.back();
}

UmbralSeries coeffs_from_values(const LatticeFunction& u) {
  const std::size_t len = u.values.size();
  std::vector<Rational> inv_fact(len);
  Integer fact = 1;
  for (std::size_t j = 0; j < len; ++j) {
    if (j > 0) fact *= static_cast<unsigned long>(j);
    inv_fact[j] = Rational(1, 1) / fact;
  }
  UmbralSeries out{std::vector<Rational>(len), u.h, DeltaKind::forward};
  Rational inv_hk = 1;
  const Rational inv_h = 1 / u.h;
  for (std::size_t k = 0; k < len; ++k) {
    Rational acc = 0;
    for (std::size_t j = 0; j <= k; ++j) {
      if (sgn(u.values[j]) == 0) continue;
      Rational term = u.values[j] * inv_fact[j] * inv_fact[k - j];
      if ((k - j) % 2 == 1) term = -term;
      acc += term;
    }
    out.zeta[k] = acc * inv_hk;
    inv_hk *= inv_h;
  }
  return out;
}

UmbralSeries leibniz_residual(const UmbralSeries& f, const UmbralSeries& g, std::size_t bound) {
  require_compatible(f, g);
  UmbralSeries residual = delta_derive(star_multiply(f, g, bound));
  residual -= star_multiply(delta_derive(f), g, bound);
  residual -= star_multiply(f, delta_derive(g), bound);
  // Truncation at `bound` only reaches the residual above degree bound-1.
  if (bound == 0) {
    residual.zeta.clear();
  } else if (residual.zeta.size() > bound) {
    residual.zeta.resize(bound);
  }
  return residual;
}

}  // namespace umbra
