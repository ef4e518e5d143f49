#include <benchmark/benchmark.h>

#include "polyface/polytope.hpp"
#include "polyface/projection.hpp"

using namespace polyface;
using polytope::CyclicSpec;
using polytope::PolytopeModel;

static void BM_ExactSurvivalSweep(benchmark::State& state) {
  const PolytopeModel p = polytope::build_cyclic(CyclicSpec::standard(5, 8));
  const auto lat = face_lattice(p);
  const auto s = projection::FixedSubspace::coordinate(5, 4, 5);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(projection::surviving_k_faces(p, lat, s, k));
}
BENCHMARK(BM_ExactSurvivalSweep)->Arg(0)->Arg(1)->Arg(2);

static void BM_ProjectionIdentity(benchmark::State& state) {
  const PolytopeModel p = polytope::build_cyclic(CyclicSpec::standard(6, 9));
  const auto lat = face_lattice(p);
  const auto s = projection::FixedSubspace::coordinate(6, 5, 6);
  for (auto _ : state) benchmark::DoNotOptimize(projection::projection_identity(p, lat, s, 2));
}
BENCHMARK(BM_ProjectionIdentity);

static void BM_GeneralPositionCheck(benchmark::State& state) {
  const PolytopeModel p = polytope::build_cyclic(CyclicSpec::standard(6, 9));
  const auto lat = face_lattice(p);
  const auto s = projection::FixedSubspace::coordinate(6, 5, 6);
  for (auto _ : state) benchmark::DoNotOptimize(projection::general_position_check(p, lat, s));
}
BENCHMARK(BM_GeneralPositionCheck);
