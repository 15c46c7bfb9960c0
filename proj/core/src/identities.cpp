#include "umbra/identities.hpp"

#include <functional>
#include <initializer_list>
#include <utility>

#include "umbra/combinatorics.hpp"
#include "umbra/errors.hpp"

namespace umbra {
namespace {

// sum_{k=0}^{n} sign(k) C(n,k) weight(k) a^k, with sign(k) = (-1)^(n-k) when
// from_top is set and (-1)^k otherwise.
Rational weighted_alternating_sum(std::size_t n, const Rational& a, bool from_top,
                                  const std::function<Rational(std::size_t)>& weight) {
  Rational sum = 0;
  Rational ak = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) ak *= a;
    const Rational w = weight(k);
    if (sgn(w) != 0) {
      Rational term = Rational(binomial(n, k)) * w * ak;
      if ((from_top ? n - k : k) % 2 == 1) term = -term;
      sum += term;
    }
  }
  return sum;
}

Rational delta(std::size_t n, std::size_t m) { return n == m ? 1 : 0; }

Rational moment_weight(std::size_t k, unsigned m) {
  const Rational kk(static_cast<unsigned long>(k));
  switch (m) {
    case 0:
      return 1;
    case 1:
      return kk;
    default:
      return kk * kk;
  }
}

// An identity in n alone, or in n and one parameter.
struct Identity {
  std::string name;
  std::string statement;
  enum class Params { none, a, ab } params = Params::none;
  // Restricts the range (e.g. n > 0) or skips points where the closed
  // form is a literal 0/0.
  std::function<bool(std::size_t, const EulerProblem&)> applies;
  std::function<Rational(std::size_t, const EulerProblem&)> lhs;
  std::function<Rational(std::size_t, const EulerProblem&)> rhs;
};

std::vector<Identity> identity_table() {
  using P = Identity::Params;
  const auto always = [](std::size_t, const EulerProblem&) { return true; };
  const Rational one = 1;

  std::vector<Identity> table;
  table.push_back({"newton_binomial", "sum (-1)^(n-k) C(n,k) a^k = (a-1)^n", P::a, always,
                   [](std::size_t n, const EulerProblem& s) { return newton_sum(n, s.a); },
                   [](std::size_t n, const EulerProblem& s) -> Rational { return pow(s.a - 1, n); }});
  table.push_back({"newton_binomial_at_one", "sum (-1)^(n-k) C(n,k) = 0 for n > 0", P::none,
                   [](std::size_t n, const EulerProblem&) { return n > 0; },
                   [one](std::size_t n, const EulerProblem&) { return newton_sum(n, one); },
                   [](std::size_t, const EulerProblem&) -> Rational { return Rational(0); }});
  table.push_back({"newton_binomial_empty", "sum (-1)^(n-k) C(n,k) a^k = 1 for n = 0", P::a,
                   [](std::size_t n, const EulerProblem&) { return n == 0; },
                   [](std::size_t n, const EulerProblem& s) { return newton_sum(n, s.a); },
                   [](std::size_t, const EulerProblem&) -> Rational { return Rational(1); }});
  table.push_back({"alternating_sum", "sum (-1)^(n-k) C(n,k) = delta_{n0}", P::none, always,
                   [one](std::size_t n, const EulerProblem&) { return newton_sum(n, one); },
                   [](std::size_t n, const EulerProblem&) -> Rational { return delta(n, 0); }});
  table.push_back({"first_moment_weighted", "sum (-1)^(n-k) C(n,k) k a^k = n a (a-1)^(n-1)",
                   P::a, always,
                   [](std::size_t n, const EulerProblem& s) -> Rational {
                     return weighted_alternating_sum(n, s.a, true,
                                                     [](std::size_t k) -> Rational { return moment_weight(k, 1); });
                   },
                   [](std::size_t n, const EulerProblem& s) -> Rational {
                     if (n == 0) return Rational(0);
                     return Rational(static_cast<unsigned long>(n) * s.a * pow(s.a - 1, n - 1));
                   }});
  table.push_back({"first_moment_at_one", "sum (-1)^(n-k) C(n,k) k = 0 for n > 1", P::none,
                   [](std::size_t n, const EulerProblem&) { return n > 1; },
                   [one](std::size_t n, const EulerProblem&) -> Rational {
                     return weighted_alternating_sum(n, one, true,
                                                     [](std::size_t k) -> Rational { return moment_weight(k, 1); });
                   },
                   [](std::size_t, const EulerProblem&) -> Rational { return Rational(0); }});
  table.push_back({"first_moment", "sum (-1)^k C(n,k) k = -delta_{n1}", P::none, always,
                   [](std::size_t n, const EulerProblem&) -> Rational { return alt_binom_moment(n, 1); },
                   [](std::size_t n, const EulerProblem&) -> Rational { return Rational(-delta(n, 1)); }});
  table.push_back({"second_falling_moment_weighted",
                   "sum (-1)^(n-k) C(n,k) k(k-1) a^(k-2) = n(n-1)(a-1)^(n-2)", P::a,
                   // a^(k-2) is only a polynomial in a once the k < 2 terms
                   // (which carry k(k-1) = 0) are dropped, so a = 0 is fine.
                   always,
                   [](std::size_t n, const EulerProblem& s) -> Rational {
                     Rational sum = 0;
                     for (std::size_t k = 2; k <= n; ++k) {
                       Rational term = Rational(binomial(n, k)) *
                                       static_cast<unsigned long>(k * (k - 1)) * pow(s.a, k - 2);
                       if ((n - k) % 2 == 1) term = -term;
                       sum += term;
                     }
                     return sum;
                   },
                   [](std::size_t n, const EulerProblem& s) -> Rational {
                     if (n < 2) return Rational(0);
                     return Rational(static_cast<unsigned long>(n * (n - 1)) * pow(s.a - 1, n - 2));
                   }});
  table.push_back({"second_moment_difference",
                   "sum (-1)^(n-k) C(n,k) k^2 a^k - sum (-1)^(n-k) C(n,k) k a^k = "
                   "n(n-1) a^2 (a-1)^(n-2)",
                   P::a, always,
                   [](std::size_t n, const EulerProblem& s) -> Rational {
                     return weighted_alternating_sum(n, s.a, true,
                                                     [](std::size_t k) -> Rational { return moment_weight(k, 2); }) -
                            weighted_alternating_sum(n, s.a, true,
                                                     [](std::size_t k) -> Rational { return moment_weight(k, 1); });
                   },
                   [](std::size_t n, const EulerProblem& s) -> Rational {
                     if (n < 2) return Rational(0);
                     return Rational(static_cast<unsigned long>(n * (n - 1)) * s.a * s.a *
                                     pow(s.a - 1, n - 2));
                   }});
  table.push_back({"second_moment_weighted",
                   "sum (-1)^(n-k) C(n,k) k^2 a^k = n a (n a - 1)(a-1)^(n-2)", P::a,
                   // At a = 1, n = 1 the closed form reads 0 * 0^-1; that point
                   // is covered by the a = 1 identities below.
                   [](std::size_t n, const EulerProblem& s) { return !(n == 1 && s.a == 1); },
                   [](std::size_t n, const EulerProblem& s) -> Rational {
                     return weighted_alternating_sum(n, s.a, true,
                                                     [](std::size_t k) -> Rational { return moment_weight(k, 2); });
                   },
                   [](std::size_t n, const EulerProblem& s) -> Rational {
                     if (n == 0) return Rational(0);
                     const Rational na = static_cast<unsigned long>(n) * s.a;
                     if (n == 1) return Rational(na * (na - 1) / (s.a - 1));
                     return Rational(na * (na - 1) * pow(s.a - 1, n - 2));
                   }});
  table.push_back({"second_moment_at_one", "sum (-1)^(n-k) C(n,k) k^2 = 0 for n > 2", P::none,
                   [](std::size_t n, const EulerProblem&) { return n > 2; },
                   [one](std::size_t n, const EulerProblem&) -> Rational {
                     return weighted_alternating_sum(n, one, true,
                                                     [](std::size_t k) -> Rational { return moment_weight(k, 2); });
                   },
                   [](std::size_t, const EulerProblem&) -> Rational { return Rational(0); }});
  table.push_back({"second_moment_n1", "sum (-1)^k C(n,k) k^2 = -1 for n = 1", P::none,
                   [](std::size_t n, const EulerProblem&) { return n == 1; },
                   [](std::size_t n, const EulerProblem&) -> Rational { return alt_binom_moment(n, 2); },
                   [](std::size_t, const EulerProblem&) -> Rational { return Rational(-1); }});
  table.push_back({"second_moment_n2", "sum (-1)^k C(n,k) k^2 = 2 for n = 2", P::none,
                   [](std::size_t n, const EulerProblem&) { return n == 2; },
                   [](std::size_t n, const EulerProblem&) -> Rational { return alt_binom_moment(n, 2); },
                   [](std::size_t, const EulerProblem&) -> Rational { return Rational(2); }});
  table.push_back({"second_moment", "sum (-1)^k C(n,k) k^2 = 2 delta_{n2} - delta_{n1}", P::none,
                   always,
                   [](std::size_t n, const EulerProblem&) -> Rational { return alt_binom_moment(n, 2); },
                   [](std::size_t n, const EulerProblem&) -> Rational {
                     return Rational(2 * delta(n, 2) - delta(n, 1));
                   }});
  table.push_back({"indicial_alternating_sum",
                   "sum (-1)^k C(n,k) Lambda_k = 2 delta_{n2} - a delta_{n1} + b delta_{n0}", P::ab,
                   always,
                   [](std::size_t n, const EulerProblem& s) -> Rational { return lambda_alt_sum(n, s.a, s.b); },
                   [](std::size_t n, const EulerProblem& s) -> Rational {
                     return Rational(2 * delta(n, 2) - s.a * delta(n, 1) + s.b * delta(n, 0));
                   }});
  return table;
}

}  // namespace

Rational newton_sum(std::size_t n, const Rational& a) {
  return weighted_alternating_sum(n, a, true, [](std::size_t) -> Rational { return Rational(1); });
}

Rational alt_binom_moment(std::size_t n, unsigned m) {
  if (m > 2) throw UnsupportedMomentError("moment order must be 0, 1 or 2, got " + std::to_string(m));
  return weighted_alternating_sum(n, 1, false, [m](std::size_t k) -> Rational { return moment_weight(k, m); });
}

Rational lambda_alt_sum(std::size_t n, const Rational& a, const Rational& b) {
  const EulerProblem problem{a, b};
  return weighted_alternating_sum(n, 1, false, [&problem](std::size_t k) -> Rational {
    return indicial(problem, static_cast<long>(k));
  });
}

std::vector<IdentityReport> run_identity_suite(std::size_t n_max,
                                               const std::vector<EulerProblem>& samples) {
  std::vector<IdentityReport> reports;
  const EulerProblem unused{0, 0};
  for (const Identity& identity : identity_table()) {
    IdentityReport report;
    report.name = identity.name;
    report.statement = identity.statement;
    report.n_max = n_max;

    std::vector<EulerProblem> points;
    if (identity.params == Identity::Params::none) {
      points.push_back(unused);
    } else {
      points = samples;
    }
    report.samples = identity.params == Identity::Params::none ? 0 : points.size();

    for (std::size_t n = 0; n <= n_max && !report.counterexample; ++n) {
      for (const EulerProblem& s : points) {
        if (!identity.applies(n, s)) continue;
        ++report.checks;
        const Rational lhs = identity.lhs(n, s);
        const Rational rhs = identity.rhs(n, s);
        if (lhs != rhs) {
          Counterexample ce{n, std::nullopt, std::nullopt, lhs, rhs};
          if (identity.params != Identity::Params::none) ce.a = s.a;
          if (identity.params == Identity::Params::ab) ce.b = s.b;
          report.counterexample = std::move(ce);
          break;
        }
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<EulerProblem> default_identity_samples() {
  std::vector<EulerProblem> out;
  for (const auto& [a, b] : std::initializer_list<std::pair<const char*, const char*>>{
           {"-2", "2"}, {"-1", "1"}, {"0", "1"}, {"1", "0"}, {"1/2", "-3/4"},
           {"3", "-5"}, {"-7/3", "2/9"}, {"5/2", "1/2"}, {"0", "0"}, {"-4", "6"}}) {
    out.push_back({parse_rational(a), parse_rational(b)});
  }
  return out;
}

}  // namespace umbra
