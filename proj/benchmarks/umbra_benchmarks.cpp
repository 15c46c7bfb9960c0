#include <benchmark/benchmark.h>

#include "umbra/basic_sequence.hpp"
#include "umbra/delta_series.hpp"
#include "umbra/euler.hpp"
#include "umbra/identities.hpp"
#include "umbra/umbral.hpp"

namespace {

using namespace umbra;

void BM_BasicSequence(benchmark::State& state) {
  const auto degree = static_cast<std::size_t>(state.range(0));
  const DeltaSeries q = make_delta(DeltaKind::symmetric, Rational(1, 3), kDefaultTruncationBound);
  for (auto _ : state) benchmark::DoNotOptimize(basic_sequence(q, degree));
}
BENCHMARK(BM_BasicSequence)->Arg(10)->Arg(20)->Arg(40);

void BM_CnjOracleRow(benchmark::State& state) {
  const long n = state.range(0);
  const EulerProblem p{Rational(3, 7), Rational(-5, 2)};
  for (auto _ : state) {
    for (long j = 0; j <= n; ++j) benchmark::DoNotOptimize(cnj_oracle(p, n, j));
  }
}
BENCHMARK(BM_CnjOracleRow)->Arg(25)->Arg(50);

void BM_SolveRecurrence(benchmark::State& state) {
  const auto n_max = static_cast<std::size_t>(state.range(0));
  const EulerProblem p{-6, 0};
  for (auto _ : state) benchmark::DoNotOptimize(solve_recurrence(p, n_max));
}
BENCHMARK(BM_SolveRecurrence)->Arg(25)->Arg(100);

void BM_LatticeRoundTrip(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  UmbralSeries f;
  f.h = Rational(1, 2);
  for (std::size_t k = 0; k < n; ++k) f.zeta.emplace_back(static_cast<long>(k % 7) - 3, 5);
  for (auto _ : state) benchmark::DoNotOptimize(coeffs_from_values(values_from_coeffs(f)));
}
BENCHMARK(BM_LatticeRoundTrip)->Arg(16)->Arg(64);

void BM_IdentitySuite(benchmark::State& state) {
  const auto samples = default_identity_samples();
  for (auto _ : state) benchmark::DoNotOptimize(run_identity_suite(static_cast<std::size_t>(state.range(0)), samples));
}
BENCHMARK(BM_IdentitySuite)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
