#include <benchmark/benchmark.h>

#include "apolar/catalog.hpp"
#include "apolar/ranksearch.hpp"

using namespace apolar;

static void BM_ExactKernelCubics(benchmark::State& state) {
  const auto f = named_form(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ann_component(f, 3));
}
BENCHMARK(BM_ExactKernelCubics)->DenseRange(1, 6);

static void BM_Hilbert(benchmark::State& state) {
  const auto f = named_form(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert(f));
}
BENCHMARK(BM_Hilbert)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_NumericKernel(benchmark::State& state) {
  const auto f = to_complex(named_form(2));
  for (auto _ : state) benchmark::DoNotOptimize(ann_component(f, 3));
}
BENCHMARK(BM_NumericKernel);

static void BM_TrackBezout(benchmark::State& state) {
  std::mt19937_64 rng(1);
  PolySystem sys;
  sys.variables = {"x", "y"};
  sys.affine = {0, 1};
  const int d = static_cast<int>(state.range(0));
  for (int k = 0; k < 2; ++k) {
    Poly<ComplexF> p(2);
    for (int a = 0; a <= d; ++a)
      for (int b = 0; a + b <= d; ++b) p.add_term({a, b}, random_unit(rng));
    sys.equations.push_back(p);
  }
  for (auto _ : state) benchmark::DoNotOptimize(track(sys, {}));
}
BENCHMARK(BM_TrackBezout)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_RefineRankSystem(benchmark::State& state) {
  const auto fp = feasible_point(form_params(1));
  const auto sys = build_rank_system(0, fp->rows);
  std::mt19937_64 rng(2);
  auto x = fp->point;
  for (auto& v : x) v += 1e-3 * random_unit(rng);
  for (auto _ : state) benchmark::DoNotOptimize(refine(sys, x));
}
BENCHMARK(BM_RefineRankSystem)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
