#include <benchmark/benchmark.h>

#include "helly/sweep.hpp"
#include "helly/transversal.hpp"
#include "helly/transversal_sweep.hpp"

using namespace helly;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

void BM_ComplexSweep(benchmark::State& state) {
  SweepConfig c;
  c.theorem = Theorem::Helly;
  c.trials = 128;
  c.m_values = {3, 4};
  c.growth_min = 40;
  c.growth_max = 120;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(c, mode(state)).hypotheses_satisfied);
  state.SetItemsProcessed(state.iterations() * c.trials);
}

void BM_PlaneSweep(benchmark::State& state) {
  PlaneSweepConfig c = default_plane_sweep(PlaneSweepKind::TripleWithDisjointPair);
  c.trials = 256;
  for (auto _ : state) benchmark::DoNotOptimize(plane_sweep(c, mode(state)).conclusion_held);
  state.SetItemsProcessed(state.iterations() * c.trials);
}

void BM_SamplingOracle(benchmark::State& state) {
  PolygonFamilyRequest req;
  req.m = 4;
  req.box = {0, 0, 30, 30};
  req.size = {2, 10};
  const PolygonFamily f = random_polygon_family(req, 7);
  for (auto _ : state) benchmark::DoNotOptimize(sample_oracle(f, 100000, mode(state)).component_count);
}

void BM_ExactComponents(benchmark::State& state) {
  PolygonFamilyRequest req;
  req.m = static_cast<int>(state.range(0));
  req.box = {0, 0, 30, 30};
  req.size = {2, 10};
  const PolygonFamily f = random_polygon_family(req, 7);
  for (auto _ : state) benchmark::DoNotOptimize(transversal_components(f).component_count);
}

}  // namespace

BENCHMARK(BM_ComplexSweep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PlaneSweep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SamplingOracle)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactComponents)->Arg(1)->Arg(4)->Arg(8)->ArgName("m")->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
