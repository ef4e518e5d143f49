#include <benchmark/benchmark.h>

#include "polyface/angles.hpp"

using namespace polyface;
using polytope::NumericModel;
using polytope::PolytopeModel;

namespace {
const NumericModel& cube_body() {
  static const PolytopeModel p = polytope::cube(3);
  static const NumericModel body = to_numeric(p, face_lattice(p));
  return body;
}
}  // namespace

static void BM_SolidAngleSum(benchmark::State& state) {
  const uint64_t n = static_cast<uint64_t>(state.range(0));
  uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(angles::solid_angle_sum(cube_body(), 0, n, seed++));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_SolidAngleSum)->Arg(1000)->Arg(10000);

static void BM_GrassmannSumCrosschecked(benchmark::State& state) {
  const uint64_t n = static_cast<uint64_t>(state.range(0));
  uint64_t seed = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        angles::grassmann_angle_sum(cube_body(), 0, 2, n, seed++, true));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_GrassmannSumCrosschecked)->Arg(500)->Arg(2000);

static void BM_SurvivalLp(benchmark::State& state) {
  const NumericModel& body = cube_body();
  Eigen::MatrixXd w(3, 2);
  w << 0.26726124191242440, 0.15430334996209191,
       0.53452248382484879, 0.77151674981045955,
       0.80178372573727308, -0.61721339984836764;
  for (auto _ : state)
    for (int v = 0; v < 8; ++v)
      benchmark::DoNotOptimize(angles::face_survives(body, 0, v, w));
}
BENCHMARK(BM_SurvivalLp);
