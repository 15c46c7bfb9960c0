#include "umbra/euler.hpp"

#include <algorithm>
#include <string>

#include "umbra/combinatorics.hpp"
#include "umbra/errors.hpp"

namespace umbra {
namespace {

using Column = std::vector<Rational>;  // a value as a linear form in the free parameters

void axpy(Column& y, const Rational& alpha, const Column& x) {
  if (y.size() < x.size()) y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

bool all_zero(const Column& c) {
  return std::all_of(c.begin(), c.end(), [](const Rational& v) { return sgn(v) == 0; });
}

// Solves M c = rhs for a small square rational matrix by Gauss-Jordan.
// Returns false if M is singular.
bool solve_square(std::vector<std::vector<Rational>> m, Column& rhs) {
  const std::size_t d = m.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == d) return false;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& v : m[col]) v *= inv;
    rhs[col] *= inv;
    for (std::size_t row = 0; row < d; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      const Rational factor = m[row][col];
      for (std::size_t k = 0; k < d; ++k) m[row][k] -= factor * m[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }
  return true;
}

std::vector<std::string> root_diagnostics(const IndicialData& data, std::size_t n_max) {
  std::vector<std::string> out;
  switch (data.kind) {
    case RootKind::complex:
      out.push_back("indicial roots are complex (discriminant " + to_string(data.discriminant) +
                    "); no power-type lattice solution");
      return out;
    case RootKind::irrational:
      out.push_back("indicial roots are irrational (discriminant " +
                    to_string(data.discriminant) + "); no power-type lattice solution");
      return out;
    case RootKind::double_rational:
    case RootKind::distinct_rational:
      break;
  }
  for (const auto& root : data.roots) {
    const std::string r = to_string(root.value);
    if (!is_integer(root.value) || sgn(root.value) < 0) {
      out.push_back("root " + r + " is not a nonnegative integer; it yields no lattice solution");
    } else if (root.value > static_cast<unsigned long>(n_max)) {
      out.push_back("root " + r + " lies beyond n_max = " + std::to_string(n_max));
    }
    if (root.multiplicity == 2) {
      out.push_back("double root " + r +
                    ": the second, logarithmic solution is not a lattice power series");
    }
  }
  return out;
}

}  // namespace

Rational indicial(const EulerProblem& problem, long k) {
  const Rational kk(k);
  return kk * (kk - 1) + problem.a * kk + problem.b;
}

std::string to_string(RootKind kind) {
  switch (kind) {
    case RootKind::distinct_rational:
      return "distinct_rational";
    case RootKind::double_rational:
      return "double_rational";
    case RootKind::irrational:
      return "irrational";
    case RootKind::complex:
      return "complex";
  }
  return "unknown";
}

IndicialData indicial_roots(const EulerProblem& problem) {
  IndicialData data;
  data.problem = problem;
  const Rational p = problem.a - 1;  // r^2 + p r + b
  data.discriminant = p * p - 4 * problem.b;
  const int sign = sgn(data.discriminant);
  Rational root;
  if (sign < 0) {
    data.kind = RootKind::complex;
  } else if (sign == 0) {
    data.kind = RootKind::double_rational;
    data.roots.push_back({Rational(-p / 2), 2});
  } else if (rational_sqrt(data.discriminant, root)) {
    data.kind = RootKind::distinct_rational;
    data.roots.push_back({Rational((-p - root) / 2), 1});
    data.roots.push_back({Rational((-p + root) / 2), 1});
  } else {
    data.kind = RootKind::irrational;
  }
  for (const auto& r : data.roots) {
    if (is_integer(r.value) && sgn(r.value) >= 0 && r.value.get_num().fits_ulong_p()) {
      data.integer_roots.push_back(r.value.get_num().get_ui());
    }
  }
  return data;
}

Rational cnj_oracle(const EulerProblem& problem, long n, long j) {
  if (j < 0 || j > n) {
    throw IndexError("c_nj needs 0 <= j <= n, got n = " + std::to_string(n) +
                     ", j = " + std::to_string(j));
  }
  const auto m = static_cast<std::size_t>(n - j);
  Rational sum = 0;
  for (long k = j; k <= n; ++k) {
    Rational term = Rational(binomial(m, static_cast<std::size_t>(k - j))) * indicial(problem, k);
    if ((k - j) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

RecurrenceCoefficients discrete_coeffs(const EulerProblem& problem, std::size_t n) {
  const Rational nn(static_cast<unsigned long>(n));
  return RecurrenceCoefficients{
      Rational(2),
      Rational(-problem.a - 2 * (nn - 1)),
      Rational(nn * nn + (problem.a - 1) * nn + problem.b),
  };
}

Rational DiscreteEulerEquation::residual(std::span<const Rational> values, std::size_t n) const {
  if (n >= values.size()) throw IndexError("residual index beyond the supplied values");
  const Rational nn(static_cast<unsigned long>(n));
  Rational r = indicial(problem_, static_cast<long>(n)) * values[n];
  if (n >= 1) r -= nn * (problem_.a + 2 * nn - 2) * values[n - 1];
  if (n >= 2) r += nn * (nn - 1) * values[n - 2];
  return r;
}

UmbralSeries apply_euler_diagonal(const UmbralSeries& f, const EulerProblem& problem) {
  if (f.basis != DeltaKind::forward) {
    throw NotImplementedError("the Euler operator is diagonal only in the forward basis");
  }
  UmbralSeries out = f;
  for (std::size_t k = 0; k < out.zeta.size(); ++k) {
    out.zeta[k] *= indicial(problem, static_cast<long>(k));
  }
  return out;
}

SolutionSpace solve_recurrence(const EulerProblem& problem, std::size_t n_max, const Rational& h) {
  SolutionSpace space;
  space.n_max = n_max;

  // u[n] expressed in the free parameters opened so far.
  std::vector<Column> u(n_max + 1);
  std::size_t params = 0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Rational nn(static_cast<unsigned long>(n));
    Column rhs(params);
    if (n >= 1) axpy(rhs, nn * (problem.a + 2 * nn - 2), u[n - 1]);
    if (n >= 2) axpy(rhs, -nn * (nn - 1), u[n - 2]);
    rhs.resize(params);

    const Rational lambda = indicial(problem, static_cast<long>(n));
    if (sgn(lambda) != 0) {
      for (auto& v : rhs) v /= lambda;
      u[n] = std::move(rhs);
      continue;
    }
    if (!all_zero(rhs)) {
      throw InconsistentRecurrenceError("singular step n = " + std::to_string(n) +
                                        " has a nonzero consistency residual");
    }
    space.free_indices.push_back(n);
    ++params;
    u[n] = Column(params);
    u[n].back() = 1;
  }
  for (auto& col : u) col.resize(params);

  const IndicialData data = indicial_roots(problem);
  space.diagnostics = root_diagnostics(data, n_max);
  if (params == 0) return space;

  // Umbral coefficients (on the unit lattice) of each parameter direction.
  std::vector<Column> zeta(params);
  for (std::size_t i = 0; i < params; ++i) {
    LatticeFunction direction{std::vector<Rational>(n_max + 1), 1};
    for (std::size_t n = 0; n <= n_max; ++n) direction.values[n] = u[n][i];
    zeta[i] = coeffs_from_values(direction).zeta;
    for (std::size_t k = 0; k <= n_max; ++k) {
      const bool free = std::find(space.free_indices.begin(), space.free_indices.end(), k) !=
                        space.free_indices.end();
      if (!free && sgn(zeta[i][k]) != 0) {
        throw InconsistentRecurrenceError("solution direction has umbral coefficient at " +
                                          std::to_string(k) + ", which is not an indicial root");
      }
    }
  }

  // Pick combinations whose umbral coefficients are unit vectors.
  for (std::size_t target = 0; target < params; ++target) {
    std::vector<std::vector<Rational>> m(params, Column(params));
    for (std::size_t l = 0; l < params; ++l) {
      for (std::size_t i = 0; i < params; ++i) m[l][i] = zeta[i][space.free_indices[l]];
    }
    Column c(params);
    c[target] = 1;
    if (!solve_square(std::move(m), c)) {
      throw InconsistentRecurrenceError("solution directions are linearly dependent");
    }
    LatticeFunction element{std::vector<Rational>(n_max + 1), h};
    for (std::size_t n = 0; n <= n_max; ++n) {
      for (std::size_t i = 0; i < params; ++i) element.values[n] += c[i] * u[n][i];
    }
    space.basis.push_back(std::move(element));
  }
  return space;
}

LatticeFunction exact_solution(std::size_t r, std::size_t n_max, const Rational& h) {
  if (r > n_max) {
    throw BoundError("root " + std::to_string(r) + " exceeds n_max = " + std::to_string(n_max));
  }
  LatticeFunction u{std::vector<Rational>(n_max + 1), h};
  const Rational scale = pow(h, r);
  for (std::size_t n = r; n <= n_max; ++n) u.values[n] = scale * falling_factorial(n, r);
  return u;
}

std::vector<Residual> verify_solution(const LatticeFunction& u, const EulerProblem& problem) {
  if (u.values.size() < 3) throw BoundError("verification needs at least three lattice values");
  const DiscreteEulerEquation equation(problem);
  std::vector<Residual> out;
  out.reserve(u.values.size() - 2);
  for (std::size_t n = 2; n < u.values.size(); ++n) {
    out.push_back({n, equation.residual(u.values, n)});
  }
  return out;
}

Rational scaled_difference_form(const LatticeFunction& u, const EulerProblem& problem,
                                std::size_t n) {
  if (n < 2 || n >= u.values.size()) throw IndexError("scaled difference form needs 2 <= n <= n_max");
  const Rational& h = u.h;
  const Rational x = h * static_cast<unsigned long>(n);
  const auto& v = u.values;
  const Rational second = (v[n] - 2 * v[n - 1] + v[n - 2]) / (h * h);
  const Rational first = (v[n] - v[n - 1]) / h;
  const Rational nn(static_cast<unsigned long>(n));
  return nn * (nn - 1) * h * h * second + problem.a * x * first + problem.b * v[n];
}

std::vector<LimitRow> continuous_limit_study(std::size_t r, const Rational& x,
                                             std::span<const Rational> h_list) {
  if (sgn(x) <= 0) throw DomainError("limit study needs x > 0");
  const Rational target = pow(x, r);
  std::vector<LimitRow> rows;
  rows.reserve(h_list.size());
  for (const Rational& h : h_list) {
    if (sgn(h) <= 0) throw DomainError("spacing must be positive, got " + to_string(h));
    if (!is_integer(Rational(x / h))) {
      throw LatticeMismatchError("x = " + to_string(x) + " is not a multiple of h = " +
                                 to_string(h));
    }
    Rational lattice = 1;
    for (std::size_t j = 0; j < r; ++j) lattice *= x - h * static_cast<unsigned long>(j);
    LimitRow row{h, abs(lattice - target), std::nullopt};
    if (!rows.empty() && sgn(row.error) != 0) row.ratio = rows.back().error / row.error;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace umbra
