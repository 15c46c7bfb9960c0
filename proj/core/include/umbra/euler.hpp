#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umbra/rational.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

// x^2 u'' + a x u' + b u = 0 with rational coefficients.
struct EulerProblem {
  Rational a;
  Rational b;

  friend bool operator==(const EulerProblem&, const EulerProblem&) = default;
};

// Lambda_k = k(k-1) + a k + b.
Rational indicial(const EulerProblem& problem, long k);

enum class RootKind {
  distinct_rational,
  double_rational,
  irrational,  // real, but the discriminant is not a rational square
  complex,
};

std::string to_string(RootKind kind);

struct IndicialRoot {
  Rational value;
  int multiplicity = 1;
};

// Roots of r^2 + (a-1) r + b over the rationals.
struct IndicialData {
  EulerProblem problem;
  RootKind kind = RootKind::complex;
  Rational discriminant;              // (a-1)^2 - 4b
  std::vector<IndicialRoot> roots;    // rational roots only, ascending
  std::vector<std::size_t> integer_roots;  // distinct nonnegative integer roots, ascending

  Rational lambda(long k) const { return indicial(problem, k); }
};

IndicialData indicial_roots(const EulerProblem& problem);

// Literal sum_{k=j}^{n} (-1)^(k-j) C(n-j, k-j) Lambda_k.
// Throws IndexError unless 0 <= j <= n.
Rational cnj_oracle(const EulerProblem& problem, long n, long j);

struct RecurrenceCoefficients {
  Rational c_nm2;  // 2
  Rational c_nm1;  // -a - 2(n-1)
  Rational c_nn;   // n^2 + (a-1) n + b = Lambda_n

  friend bool operator==(const RecurrenceCoefficients&, const RecurrenceCoefficients&) = default;
};

// Closed form of the only three nonzero c_nj, at j = n-2, n-1, n.
RecurrenceCoefficients discrete_coeffs(const EulerProblem& problem, std::size_t n);

// The three-term recurrence
//   Lambda_n u_n - n(a + 2n - 2) u_{n-1} + n(n-1) u_{n-2} = 0,
// i.e. sum_j C(n,j) c_nj u_j = 0. For n < 2 the missing terms carry zero
// weight and are dropped.
class DiscreteEulerEquation {
 public:
  explicit DiscreteEulerEquation(EulerProblem problem) : problem_(std::move(problem)) {}

  const EulerProblem& problem() const { return problem_; }
  RecurrenceCoefficients coefficients(std::size_t n) const {
    return discrete_coeffs(problem_, n);
  }

  // Left-hand side at index n; requires n < values.size().
  Rational residual(std::span<const Rational> values, std::size_t n) const;

 private:
  EulerProblem problem_;
};

// Coefficientwise Lambda_k zeta_k: the umbral Euler operator, diagonal in the
// basic polynomial basis. Throws NotImplementedError for non-forward bases.
UmbralSeries apply_euler_diagonal(const UmbralSeries& f, const EulerProblem& problem);

struct SolutionSpace {
  std::size_t n_max = 0;
  std::vector<std::size_t> free_indices;
  // One element per free index r, normalized so its umbral coefficients are
  // the unit vector e_r; the element is then n!/(n-r)! and takes value r! at r.
  std::vector<LatticeFunction> basis;
  // Why roots of the indicial polynomial did not produce a basis element.
  std::vector<std::string> diagnostics;

  std::size_t dimension() const { return basis.size(); }
};

// Steps the recurrence forward from n = 0. A regular step (Lambda_n != 0)
// determines u_n. A singular step (Lambda_n = 0) demands that the remaining
// terms cancel and then opens a free parameter. The recurrence does not
// involve h; it only labels the returned lattice functions.
// Throws InconsistentRecurrenceError if a singular step does not cancel.
SolutionSpace solve_recurrence(const EulerProblem& problem, std::size_t n_max,
                               const Rational& h = 1);

// u_n = h^r n!/(n-r)!, zero for n < r. Throws BoundError if r > n_max.
LatticeFunction exact_solution(std::size_t r, std::size_t n_max, const Rational& h = 1);

struct Residual {
  std::size_t n = 0;
  Rational value;
};

// Recurrence residual at n = 2..n_max. Throws BoundError for fewer than 3 values.
std::vector<Residual> verify_solution(const LatticeFunction& u, const EulerProblem& problem);

// The recurrence at index n rewritten with scaled differences on x = nh:
//   n(n-1) h^2 (u_n - 2u_{n-1} + u_{n-2})/h^2 + a (nh)(u_n - u_{n-1})/h + b u_n,
// the form whose h -> 0 limit is x^2 u'' + a x u' + b u. Requires n >= 2.
Rational scaled_difference_form(const LatticeFunction& u, const EulerProblem& problem,
                                std::size_t n);

struct LimitRow {
  Rational h;
  Rational error;                // |x(x-h)...(x-(r-1)h) - x^r|
  std::optional<Rational> ratio;  // previous error / this error
};

// Distance between the lattice solution p_r(x; h) and x^r at a fixed point
// x for each spacing. Throws LatticeMismatchError if some x/h is not a
// positive integer and DomainError if x <= 0.
std::vector<LimitRow> continuous_limit_study(std::size_t r, const Rational& x,
                                             std::span<const Rational> h_list);

}  // namespace umbra
