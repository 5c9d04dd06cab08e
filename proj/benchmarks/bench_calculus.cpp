#include <benchmark/benchmark.h>

#include "cxs/forms.hpp"
#include "cxs/optical.hpp"

using namespace cxs;

static void BM_PolyProduct(benchmark::State& state) {
  const auto& c = optical::cr_coordinates();
  Rng rng(2);
  const auto a = optical::random_poly(c, static_cast<int>(state.range(0)), rng, 1.0);
  const auto b = optical::random_poly(c, static_cast<int>(state.range(0)), rng, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyProduct)->Arg(2)->Arg(4);

static void BM_ExteriorDerivative(benchmark::State& state) {
  const auto& c = optical::chart_coordinates();
  Rng rng(3);
  xcalc::PolyForm w(c, 1);
  for (const char* x : {"u", "x", "y", "r"})
    w = w + optical::random_poly(c, 3, rng) * xcalc::PolyForm::dx(c, x);
  for (auto _ : state) benchmark::DoNotOptimize(xcalc::d(w));
}
BENCHMARK(BM_ExteriorDerivative);

static void BM_RTChart(benchmark::State& state) {
  Rng rng(4);
  const optical::CRData data{optical::random_poly(optical::cr_coordinates(), 3, rng)};
  for (auto _ : state) {
    const auto chart = optical::rt_metric(data, xcalc::Poly(optical::chart_coordinates(), Scalar(1)),
                                          xcalc::PolyForm::dx(optical::chart_coordinates(), "r"));
    const auto n = optical::null_plane_from_chart(chart);
    benchmark::DoNotOptimize(optical::total_nullity(n, chart.metric) && optical::integrability_check(n));
  }
}
BENCHMARK(BM_RTChart);
