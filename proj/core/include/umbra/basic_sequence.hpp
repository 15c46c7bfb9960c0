#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "umbra/delta_series.hpp"
#include "umbra/polynomial.hpp"

namespace umbra {

// Polynomials p_0..p_N attached to a delta operator Q. A sequence produced by
// basic_sequence() always satisfies
//   p_0 = 1,  p_n(0) = 0 for n >= 1,  Q p_n = n p_{n-1}.
// Hand-built sequences need not; run check_basic() on them.
struct BasicSequence {
  std::vector<Polynomial> polys;
  DeltaSeries op;

  std::size_t size() const { return polys.size(); }
  const Polynomial& operator[](std::size_t n) const { return polys.at(n); }
};

// Generates p_n = (x beta)^n 1 with beta = (Q')^-1.
// Throws DomainError if Q is not a delta operator and BoundError if
// degree > order_bound(Q).
BasicSequence basic_sequence(const DeltaSeries& q, std::size_t degree);

struct BasicCheckRow {
  std::size_t n = 0;
  bool normalized = true;     // p_0 = 1; vacuous for n >= 1
  bool vanishes_at_zero = true;  // p_n(0) = 0; vacuous for n = 0
  bool lowers_degree = true;  // Q p_n = n p_{n-1}, or Q p_0 = 0

  bool ok() const { return normalized && vanishes_at_zero && lowers_degree; }
};

struct BasicCheckReport {
  std::vector<BasicCheckRow> rows;
  std::optional<std::size_t> first_failure;

  bool passed() const { return !first_failure.has_value(); }
};

// Checks each defining condition at every index. Never throws: a polynomial
// that the operator cannot act on exactly is reported as failing the
// lowering condition.
BasicCheckReport check_basic(const DeltaSeries& q, const BasicSequence& seq);

// p_k(nh) for the forward operator: h^k n!/(n-k)!, which vanishes for n < k.
Rational forward_lattice_value(std::size_t k, std::size_t n, const Rational& h);

}  // namespace umbra
