#include "umbra/delta_series.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "umbra/combinatorics.hpp"
#include "umbra/errors.hpp"

namespace umbra {
namespace {

constexpr std::array<std::pair<DeltaKind, std::string_view>, 4> kKindNames{{
    {DeltaKind::derivative, "derivative"},
    {DeltaKind::forward, "forward"},
    {DeltaKind::backward, "backward"},
    {DeltaKind::symmetric, "symmetric"},
}};

void require_positive_spacing(const Rational& h) {
  if (sgn(h) <= 0) throw DomainError("lattice spacing must be positive, got " + to_string(h));
}

void require_same_lattice(const DeltaSeries& a, const DeltaSeries& b) {
  if (a.h() != b.h()) {
    throw IncompatibleError("operators built on different spacings " + to_string(a.h()) +
                            " and " + to_string(b.h()));
  }
}

}  // namespace

std::string_view to_string(DeltaKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<DeltaKind> parse_delta_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

DeltaSeries::DeltaSeries(std::vector<Rational> coefficients, Rational h, std::size_t order_bound)
    : coeffs_(std::move(coefficients)), h_(std::move(h)) {
  coeffs_.resize(order_bound + 1);
}

bool DeltaSeries::is_delta() const {
  return coeffs_.size() >= 2 && sgn(coeffs_[0]) == 0 && sgn(coeffs_[1]) != 0;
}

DeltaSeries DeltaSeries::truncated(std::size_t order_bound) const {
  if (order_bound > this->order_bound()) {
    throw BoundError("cannot extend a truncated series from order " +
                     std::to_string(this->order_bound()) + " to " + std::to_string(order_bound));
  }
  return DeltaSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order_bound + 1), h_,
                     order_bound);
}

DeltaSeries& DeltaSeries::operator+=(const DeltaSeries& other) {
  require_same_lattice(*this, other);
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

DeltaSeries& DeltaSeries::operator-=(const DeltaSeries& other) {
  require_same_lattice(*this, other);
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

DeltaSeries& DeltaSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

DeltaSeries operator*(const DeltaSeries& lhs, const DeltaSeries& rhs) {
  require_same_lattice(lhs, rhs);
  const std::size_t bound = std::min(lhs.order_bound(), rhs.order_bound());
  std::vector<Rational> out(bound + 1);
  for (std::size_t i = 0; i <= bound; ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= bound; ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return DeltaSeries(std::move(out), lhs.h_, bound);
}

DeltaSeries make_delta(DeltaKind kind, const Rational& h, std::size_t order_bound) {
  require_positive_spacing(h);
  if (order_bound == 0) {
    throw BoundError("a delta operator needs order bound >= 1 to hold its D term");
  }
  std::vector<Rational> q(order_bound + 1);
  if (kind == DeltaKind::derivative) {
    q[1] = 1;
    return DeltaSeries(std::move(q), h, order_bound);
  }
  // h^(k-1)/k! is the D^k coefficient of (exp(hD) - 1)/h.
  Rational term = 1;  // h^(k-1)/k! at k = 1
  for (std::size_t k = 1; k <= order_bound; ++k) {
    if (k > 1) term = term * h / static_cast<unsigned long>(k);
    switch (kind) {
      case DeltaKind::forward:
        q[k] = term;
        break;
      case DeltaKind::backward:
        q[k] = (k % 2 == 1) ? term : Rational(-term);
        break;
      case DeltaKind::symmetric:
        q[k] = (k % 2 == 1) ? term : Rational(0);
        break;
      case DeltaKind::derivative:
        break;
    }
  }
  return DeltaSeries(std::move(q), h, order_bound);
}

DeltaSeries shift_series(const Rational& h, std::size_t order_bound, int power) {
  require_positive_spacing(h);
  const Rational step = power >= 0 ? h : Rational(-h);
  std::vector<Rational> q(order_bound + 1);
  Rational term = 1;
  for (std::size_t k = 0; k <= order_bound; ++k) {
    if (k > 0) term = term * step / static_cast<unsigned long>(k);
    q[k] = term;
  }
  return DeltaSeries(std::move(q), h, order_bound);
}

DeltaSeries identity_series(const Rational& h, std::size_t order_bound) {
  std::vector<Rational> q(order_bound + 1);
  q[0] = 1;
  return DeltaSeries(std::move(q), h, order_bound);
}

Polynomial apply_operator(const DeltaSeries& op, const Polynomial& p) {
  if (p.degree() > static_cast<long>(op.order_bound())) {
    throw BoundError("polynomial of degree " + std::to_string(p.degree()) +
                     " exceeds operator order bound " + std::to_string(op.order_bound()));
  }
  Polynomial result;
  Polynomial dk = p;  // D^k p
  for (std::size_t k = 0; !dk.is_zero(); ++k) {
    if (sgn(op.coefficient(k)) != 0) result += dk * op.coefficient(k);
    dk = dk.derivative();
  }
  return result;
}

DeltaSeries pincherle(const DeltaSeries& op) {
  const std::size_t n = op.order_bound();
  if (n == 0) return DeltaSeries({}, op.h(), 0);
  std::vector<Rational> out(n);
  for (std::size_t k = 1; k <= n; ++k) out[k - 1] = op.coefficient(k) * static_cast<unsigned long>(k);
  return DeltaSeries(std::move(out), op.h(), n - 1);
}

DeltaSeries invert_series(const DeltaSeries& op) {
  const auto q = op.coefficients();
  if (sgn(q[0]) == 0) throw NonInvertibleError("series with zero constant term has no inverse");
  const std::size_t n = op.order_bound();
  std::vector<Rational> inv(n + 1);
  const Rational lead = 1 / q[0];
  inv[0] = lead;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += q[i] * inv[k - i];
    inv[k] = -acc * lead;
  }
  return DeltaSeries(std::move(inv), op.h(), n);
}

DeltaSeries beta_operator(const DeltaSeries& q) { return invert_series(pincherle(q)); }

Polynomial heisenberg_weyl_commutator(const DeltaSeries& q, const Polynomial& p) {
  const DeltaSeries beta = beta_operator(q);
  const Polynomial forward = apply_operator(q, apply_operator(beta, p).times_x());
  const Polynomial backward = apply_operator(beta, apply_operator(q, p)).times_x();
  return forward - backward;
}

}  // namespace umbra
