#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "umbra/euler.hpp"
#include "umbra/rational.hpp"

namespace umbra {

// Literal sum_{k=0}^{n} (-1)^(n-k) C(n,k) a^k; equals (a-1)^n.
Rational newton_sum(std::size_t n, const Rational& a);

// Literal sum_{k=0}^{n} (-1)^k C(n,k) k^m for m in {0, 1, 2}:
//   m = 0 -> delta_{n0},  m = 1 -> -delta_{n1},  m = 2 -> 2 delta_{n2} - delta_{n1}.
// Throws UnsupportedMomentError for other m.
Rational alt_binom_moment(std::size_t n, unsigned m);

// Literal sum_{k=0}^{n} (-1)^k C(n,k) Lambda_k; equals
// 2 delta_{n2} - a delta_{n1} + b delta_{n0}.
Rational lambda_alt_sum(std::size_t n, const Rational& a, const Rational& b);

struct Counterexample {
  std::size_t n = 0;
  std::optional<Rational> a;
  std::optional<Rational> b;
  Rational lhs;
  Rational rhs;
};

struct IdentityReport {
  std::string name;
  std::string statement;
  std::size_t n_max = 0;
  std::size_t samples = 0;  // parameter values the identity was checked at
  std::size_t checks = 0;   // (n, parameter) points actually evaluated
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

// Checks every alternating binomial identity used to collapse c_nj, over
// 0 <= n <= n_max. Identities with a free parameter a use the a of every
// sample; the indicial sum uses each (a, b) pair. One report per identity,
// in a fixed order.
std::vector<IdentityReport> run_identity_suite(std::size_t n_max,
                                               const std::vector<EulerProblem>& samples);

// Ten fixed (a, b) pairs covering integer, fractional, zero and a = 1 cases.
std::vector<EulerProblem> default_identity_samples();

}  // namespace umbra
