#include <benchmark/benchmark.h>

#include "torus/bv.hpp"
#include "torus/catalog.hpp"
#include "torus/convolution.hpp"
#include "torus/fourier.hpp"
#include "torus/norms.hpp"

using namespace torus;

static void BM_NormFixedGrid(benchmark::State& state) {
  const Distribution f = catalog("osc:0.5").f;
  const NormOptions opts{.grid = static_cast<int>(state.range(0)), .polish = false, .refine = false};
  for (auto _ : state) benchmark::DoNotOptimize(alexiewicz_norm_estimate(f, opts).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormFixedGrid)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

static void BM_NormRefined(benchmark::State& state) {
  const Distribution f = catalog(state.range(0) == 0 ? "weierstrass" : "cantor").f;
  for (auto _ : state) benchmark::DoNotOptimize(alexiewicz_norm_estimate(f).value);
}
BENCHMARK(BM_NormRefined)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Coeffs(benchmark::State& state) {
  const Distribution f = catalog("osc:0.5").f;
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coeffs(f, N).values().data());
}
BENCHMARK(BM_Coeffs)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_Stieltjes(benchmark::State& state) {
  const Primitive F = catalog("weierstrass").f.primitive();
  const BVFunction g = bv_catalog(state.range(0) == 0 ? "indicator" : "cos:2");
  for (auto _ : state) benchmark::DoNotOptimize(stieltjes(F, g, -kPi, kPi));
}
BENCHMARK(BM_Stieltjes)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_ConvolvePoint(benchmark::State& state) {
  const PeriodicFunction h = convolve_bv(catalog("osc:0.5").f, bv_catalog("tent"));
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(h(x));
    x = x > 3.0 ? -3.0 : x + 0.01;
  }
}
BENCHMARK(BM_ConvolvePoint)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
