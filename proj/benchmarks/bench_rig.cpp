#include <benchmark/benchmark.h>

#include <cmath>

#include "rig/branching.hpp"
#include "rig/components.hpp"
#include "rig/harness.hpp"
#include "rig/sampler.hpp"

using namespace rig;

// Args: n, m (in thousands), c * 10.
static AttributeWeights weights_for(const benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0) * 1000);
  const auto m = static_cast<std::uint64_t>(state.range(1) * 1000);
  return build_weights({n, UniformModel{state.range(2) / 10.0, m}});
}

static void BM_SampleBipartite(benchmark::State& state) {
  const auto w = weights_for(state);
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  for (auto _ : state) {
    const auto b = sample_bipartite(w, ++seed);
    edges = b.edge_count();
    benchmark::DoNotOptimize(edges);
  }
  state.counters["edges"] = static_cast<double>(edges);
}
BENCHMARK(BM_SampleBipartite)
    ->Args({100, 100, 20})
    ->Args({1000, 1000, 20})
    ->Args({1000, 31, 20})
    ->Unit(benchmark::kMillisecond);

static void BM_ComponentSizes(benchmark::State& state) {
  const auto b = sample_bipartite(weights_for(state), 1);
  for (auto _ : state) {
    auto summary = component_sizes(b);
    benchmark::DoNotOptimize(summary.largest);
  }
  state.counters["edges"] = static_cast<double>(b.edge_count());
}
BENCHMARK(BM_ComponentSizes)
    ->Args({100, 100, 20})
    ->Args({1000, 1000, 20})
    ->Unit(benchmark::kMillisecond);

// One sweep trial: weights, sample, components, fixed point. Target < 10 s
// at n = m = 1e6, c = 2.
static void BM_FullTrial(benchmark::State& state) {
  SweepConfig cfg;
  cfg.n = static_cast<std::uint32_t>(state.range(0) * 1000);
  cfg.family.m = static_cast<std::uint64_t>(state.range(1) * 1000);
  cfg.c_min = cfg.c_max = state.range(2) / 10.0;
  cfg.trials_per_point = 1;
  for (auto _ : state) {
    cfg.master_seed++;
    auto records = run_sweep(cfg, 1);
    benchmark::DoNotOptimize(records.front().L1);
  }
}
BENCHMARK(BM_FullTrial)->Args({1000, 1000, 20})->Unit(benchmark::kMillisecond);

static void BM_GwMap(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  // Distinct values defeat the grouping, so this is the worst case.
  const auto w = build_weights({1000000, PowerLawModel{1.0, 2.0, m}});
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gw_map(w, x));
    x = x < 0.9 ? x + 0.1 : 0.0;
  }
}
BENCHMARK(BM_GwMap)->Arg(1000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_ExtinctionProbability(benchmark::State& state) {
  const auto w = build_weights({1000000, PowerLawModel{1.0, state.range(0) / 10.0, 1000000}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(extinction_probability(w).rho);
  }
}
BENCHMARK(BM_ExtinctionProbability)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
