#include <numbers>

#include <benchmark/benchmark.h>

#include "snsim/experiment.hpp"
#include "snsim/stern_gerlach.hpp"

namespace {

const snsim::PhysConstants kCodata;
const snsim::ExperimentParams kYb{1e-14, 250e-6, 5.0, 0.0};

void BM_AnalyticSweep(benchmark::State& state) {
  snsim::SweepSpec spec;
  spec.params = kYb;
  spec.durations = {5.0, 50.0};
  spec.theta_grid.count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(snsim::run_sweep(spec, kCodata));
  }
  state.SetItemsProcessed(state.iterations() * 2 * state.range(0));
}
BENCHMARK(BM_AnalyticSweep)->Arg(721)->Arg(10001);

void BM_TwoSiteIntegration(benchmark::State& state) {
  const snsim::DiscreteState initial =
      snsim::two_site_state(std::numbers::pi / 4.0, kYb.separation);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        snsim::integrate(initial, {}, kYb.mass, kCodata, t));
  }
}
BENCHMARK(BM_TwoSiteIntegration)->Arg(5)->Arg(50);

void BM_Feasibility(benchmark::State& state) {
  snsim::ExperimentParams p = kYb;
  p.duration = 50.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(snsim::feasibility(p, kCodata));
  }
}
BENCHMARK(BM_Feasibility);

}  // namespace

BENCHMARK_MAIN();
