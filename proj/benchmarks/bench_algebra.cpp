#include <benchmark/benchmark.h>

#include "cxs/clifford.hpp"
#include "cxs/clock.hpp"
#include "cxs/dirac.hpp"
#include "cxs/fourier.hpp"
#include "cxs/spinor.hpp"

using namespace cxs;

static void BM_Classify(benchmark::State& state) {
  for (auto _ : state)
    for (int m = 0; m <= 8; ++m)
      for (int k = 0; k <= m; ++k) benchmark::DoNotOptimize(clock::classify(k, m - k));
}
BENCHMARK(BM_Classify);

static void BM_HodgeMatrix(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const clifford::Signature sig(m - 1, 1);
  const auto basis = clifford::blades_of_grade(m, m / 2);
  for (auto _ : state) benchmark::DoNotOptimize(clifford::hodge_matrix(sig, basis));
}
BENCHMARK(BM_HodgeMatrix)->Arg(4)->Arg(6)->Arg(8);

static void BM_BuildGamma(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spinor::build_gamma(m - 1, 1));
}
BENCHMARK(BM_BuildGamma)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

static void BM_SolveIntertwiners(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto rep = spinor::build_gamma(m - 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spinor::solve_intertwiners(rep));
}
BENCHMARK(BM_SolveIntertwiners)->Arg(4)->Arg(8);

static void BM_DiracCurrent(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto rep = spinor::build_gamma(m - 1, 1);
  const auto pair = spinor::solve_intertwiners(rep);
  Rng rng(1);
  const auto psi = dirac::random_superposition(rep, 3, Rational(1), Rational(0), {}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(dirac::current(rep, pair, psi).divergence());
}
BENCHMARK(BM_DiracCurrent)->Arg(4)->Arg(8);

static void BM_FourierAudit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fourier::audit(n).all_pass());
}
BENCHMARK(BM_FourierAudit)->Arg(16)->Arg(64);
