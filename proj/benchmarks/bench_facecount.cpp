#include <benchmark/benchmark.h>

#include "polyface/facecount.hpp"

using namespace polyface::facecount;

static void BM_CyclicFaceCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int k = 0; k < 6; ++k) benchmark::DoNotOptimize(cyclic_face_count(6, n, k));
  }
}
BENCHMARK(BM_CyclicFaceCount)->Arg(100)->Arg(10000)->Arg(1000000);

static void BM_ReductionResidualSweep(benchmark::State& state) {
  for (auto _ : state) {
    for (int d = 2; d <= 10; ++d)
      for (int n = d + 1; n <= 25; ++n)
        for (int k = 0; k < d; ++k) benchmark::DoNotOptimize(reduction_residual(d, n, k));
  }
}
BENCHMARK(BM_ReductionResidualSweep);

static void BM_TightnessLargeN(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(tightness_table(6, 2, {100, 1000, 10000, 100000}));
}
BENCHMARK(BM_TightnessLargeN);
