#include <benchmark/benchmark.h>

#include "polyface/polytope.hpp"

using namespace polyface::polytope;

static void BM_GaleFacets(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gale_facets(d, n));
}
BENCHMARK(BM_GaleFacets)->Args({4, 10})->Args({7, 12})->Args({7, 16});

static void BM_BuildCyclic(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_cyclic(CyclicSpec::standard(d, n)));
}
BENCHMARK(BM_BuildCyclic)->Args({4, 8})->Args({6, 10});

static void BM_FaceLatticeSimplicial(benchmark::State& state) {
  const PolytopeModel p = build_cyclic(CyclicSpec::standard(6, 11));
  for (auto _ : state) benchmark::DoNotOptimize(face_lattice(p, LatticeMethod::Simplicial));
}
BENCHMARK(BM_FaceLatticeSimplicial);

static void BM_FaceLatticeGeneral(benchmark::State& state) {
  const PolytopeModel p = cube(4);
  for (auto _ : state) benchmark::DoNotOptimize(face_lattice(p, LatticeMethod::General));
}
BENCHMARK(BM_FaceLatticeGeneral);
