// Serial reference vs OpenMP kernels on a planted 5-uniform hypergraph.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <map>

#include "pahyper/experiment.hpp"
#include "pahyper/flatten.hpp"
#include "pahyper/modularity.hpp"

using namespace pahyper;

namespace {

const GRun& planted(std::uint64_t vertices) {
  static std::map<std::uint64_t, GRun> cache;
  auto it = cache.find(vertices);
  if (it == cache.end()) {
    PlantedSettings s;
    s.r = 20;
    s.uniformity = 5;
    s.vertices = vertices;
    it = cache.emplace(vertices, generate_g(planted_params(s, 0.2), 7)).first;
  }
  return it->second;
}

void BM_ScoreSerial(benchmark::State& state) {
  const GRun& run = planted(state.range(0));
  const Partition part(run.graph.communities());
  for (auto _ : state) benchmark::DoNotOptimize(hypergraph_modularity_score_serial(run.graph, part).score);
  state.SetItemsProcessed(state.iterations() * run.graph.num_edges());
}

void BM_ScoreParallel(benchmark::State& state) {
  const GRun& run = planted(state.range(0));
  const Partition part(run.graph.communities());
  for (auto _ : state) benchmark::DoNotOptimize(hypergraph_modularity_score(run.graph, part).score);
  state.SetItemsProcessed(state.iterations() * run.graph.num_edges());
}

void BM_FlattenSerial(benchmark::State& state) {
  const GRun& run = planted(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flatten_serial(run.graph));
  state.SetItemsProcessed(state.iterations() * run.graph.num_edges());
}

void BM_FlattenParallel(benchmark::State& state) {
  const GRun& run = planted(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(flatten(run.graph));
  state.SetItemsProcessed(state.iterations() * run.graph.num_edges());
}

}  // namespace

BENCHMARK(BM_ScoreSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScoreParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlattenSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FlattenParallel)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
