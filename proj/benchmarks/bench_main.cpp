#include <benchmark/benchmark.h>

#include <random>

#include "dcdsum/arc_graph.hpp"
#include "dcdsum/constructions.hpp"
#include "dcdsum/sumset_count.hpp"

namespace {

dcdsum::ArcGraph random_graph(std::size_t n, std::size_t m) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<dcdsum::ArcEdge> edges;
  while (edges.size() < m) {
    std::size_t u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges.push_back({u, v, std::nullopt});
  }
  return dcdsum::ArcGraph::with_unit_positions(n, std::move(edges));
}

void BM_CrossingsOracle(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)) / 4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dcdsum::count_crossings_oracle(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CrossingsOracle)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared);

void BM_CrossingsFast(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)) / 4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dcdsum::count_crossings_fast(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CrossingsFast)->RangeMultiplier(4)->Range(256, 1 << 20)->Complexity(benchmark::oNLogN);

void BM_IntersectionsFast(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)) / 4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dcdsum::count_intersections_fast(g));
}
BENCHMARK(BM_IntersectionsFast)->RangeMultiplier(4)->Range(256, 1 << 20);

void BM_CoprimeSumset(benchmark::State& state) {
  const auto c = dcdsum::coprime_construction(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dcdsum::sumset(c.a, c.b).size());
}
BENCHMARK(BM_CoprimeSumset)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_StreamingSeedK2(benchmark::State& state) {
  const auto built = dcdsum::sidon_seed_construction(dcdsum::paper_seed(), 2);
  dcdsum::StreamingCountOptions options;
  options.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dcdsum::sumset_size_streaming(built.a, built.a, options));
}
BENCHMARK(BM_StreamingSeedK2)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SumGraphStats(benchmark::State& state) {
  const auto c = dcdsum::coprime_construction(state.range(0));
  const auto g = dcdsum::build_sum_graph(c.a, c.b);
  for (auto _ : state) benchmark::DoNotOptimize(dcdsum::crossing_stats(g));
}
BENCHMARK(BM_SumGraphStats)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
