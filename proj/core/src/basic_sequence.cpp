#include "umbra/basic_sequence.hpp"

#include <string>

#include "umbra/combinatorics.hpp"
#include "umbra/errors.hpp"

namespace umbra {

BasicSequence basic_sequence(const DeltaSeries& q, std::size_t degree) {
  if (!q.is_delta()) throw DomainError("basic polynomials exist only for delta operators");
  if (degree > q.order_bound()) {
    throw BoundError("degree " + std::to_string(degree) + " exceeds operator order bound " +
                     std::to_string(q.order_bound()));
  }
  const DeltaSeries beta = beta_operator(q);
  std::vector<Polynomial> polys;
  polys.reserve(degree + 1);
  polys.push_back(Polynomial::constant(1));
  for (std::size_t n = 1; n <= degree; ++n) {
    polys.push_back(apply_operator(beta, polys.back()).times_x());
  }
  return BasicSequence{std::move(polys), q};
}

BasicCheckReport check_basic(const DeltaSeries& q, const BasicSequence& seq) {
  BasicCheckReport report;
  report.rows.reserve(seq.size());
  for (std::size_t n = 0; n < seq.size(); ++n) {
    BasicCheckRow row;
    row.n = n;
    const Polynomial& p = seq.polys[n];
    if (n == 0) {
      row.normalized = p == Polynomial::constant(1);
    } else {
      row.vanishes_at_zero = sgn(p.coefficient(0)) == 0;
    }
    if (p.degree() > static_cast<long>(q.order_bound())) {
      row.lowers_degree = false;
    } else {
      const Polynomial lowered = apply_operator(q, p);
      row.lowers_degree = n == 0 ? lowered.is_zero()
                                 : lowered == seq.polys[n - 1] * Rational(static_cast<unsigned long>(n));
    }
    if (!row.ok() && !report.first_failure) report.first_failure = n;
    report.rows.push_back(row);
  }
  return report;
}

Rational forward_lattice_value(std::size_t k, std::size_t n, const Rational& h) {
  return Rational(falling_factorial(n, k)) * pow(h, k);
}

}  // namespace umbra
