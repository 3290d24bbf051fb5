#include <benchmark/benchmark.h>

#include "powergraph/clique.hpp"
#include "powergraph/coloring.hpp"
#include "powergraph/generators.hpp"
#include "powergraph/graph_ops.hpp"
#include "powergraph/power_metrics.hpp"
#include "powergraph/random.hpp"

namespace pg = powergraph;

namespace {

pg::Graph sample(std::size_t n, double d, std::uint64_t seed = 1) {
  pg::RandomSource src(seed);
  return pg::gnp_sample(n, d / static_cast<double>(n), src);
}

void BM_GnpSample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto mode = state.range(1) == 0 ? pg::SamplingMode::Pairwise
                                        : pg::SamplingMode::GeometricSkip;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    pg::RandomSource src(++seed);
    benchmark::DoNotOptimize(pg::gnp_sample(n, 2.0 / static_cast<double>(n), src, mode));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GnpSample)->Args({4000, 0})->Args({4000, 1})->Args({1'000'000, 1});

void BM_PowerMaxDegree(benchmark::State& state) {
  const auto g = sample(static_cast<std::size_t>(state.range(0)), 2.0);
  const auto r = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pg::power_max_degree(g, r).delta);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PowerMaxDegree)->Args({100'000, 2})->Args({100'000, 3});

void BM_GraphPower(benchmark::State& state) {
  const auto g = sample(static_cast<std::size_t>(state.range(0)), 3.0);
  const auto r = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pg::graph_power(g, r).num_edges());
}
BENCHMARK(BM_GraphPower)->Args({20'000, 2})->Args({20'000, 3});

void BM_GreedyPowerColoring(benchmark::State& state) {
  const auto g = sample(static_cast<std::size_t>(state.range(0)), 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(pg::greedy_power_coloring(g, 2).palette_size);
}
BENCHMARK(BM_GreedyPowerColoring)->Arg(20'000);

void BM_MaxCliqueOfPower(benchmark::State& state) {
  const auto g = sample(static_cast<std::size_t>(state.range(0)), 3.0);
  const auto gr = pg::graph_power(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pg::max_clique_exact(gr));
}
BENCHMARK(BM_MaxCliqueOfPower)->Arg(2000);

void BM_DsaturChromaticOfPower(benchmark::State& state) {
  const auto g = sample(static_cast<std::size_t>(state.range(0)), 2.0);
  const auto gr = pg::graph_power(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pg::dsatur_chromatic_exact(gr).chi);
}
BENCHMARK(BM_DsaturChromaticOfPower)->Arg(60);

}  // namespace
BENCHMARK_MAIN();
