// Serial reference vs OpenMP kernel, pairwise per hot loop.

#include <benchmark/benchmark.h>

#include <random>

#include "kemeny/graph.hpp"
#include "kemeny/invariants.hpp"
#include "kemeny/linalg.hpp"
#include "kemeny/transforms.hpp"
#include "kemeny/tree_enum.hpp"

using namespace kemeny;

namespace {

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 2; b < n; ++b)
      if (coin(rng)) es.emplace_back(a, b);
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(n, es);
}

void BM_Distances_Serial(benchmark::State& s) {
  const Graph g = random_connected(static_cast<std::size_t>(s.range(0)), 0.002, 1);
  for (auto _ : s) benchmark::DoNotOptimize(all_pairs_distances_serial(g));
}
void BM_Distances_Parallel(benchmark::State& s) {
  const Graph g = random_connected(static_cast<std::size_t>(s.range(0)), 0.002, 1);
  for (auto _ : s) benchmark::DoNotOptimize(all_pairs_distances(g));
}
BENCHMARK(BM_Distances_Serial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Distances_Parallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_ForestMatrix_Serial(benchmark::State& s) {
  const Graph g = random_connected(static_cast<std::size_t>(s.range(0)), 0.2, 2);
  for (auto _ : s) benchmark::DoNotOptimize(forest_matrix_serial(g));
}
void BM_ForestMatrix_Parallel(benchmark::State& s) {
  const Graph g = random_connected(static_cast<std::size_t>(s.range(0)), 0.2, 2);
  for (auto _ : s) benchmark::DoNotOptimize(forest_matrix(g));
}
BENCHMARK(BM_ForestMatrix_Serial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ForestMatrix_Parallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Enumerate_Serial(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_trees_serial(static_cast<std::size_t>(s.range(0))));
}
void BM_Enumerate_Parallel(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_trees(static_cast<std::size_t>(s.range(0))));
}
BENCHMARK(BM_Enumerate_Serial)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate_Parallel)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_TreeInvariants_Serial(benchmark::State& s) {
  const TreeFamily fam = enumerate_trees(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(tree_invariants_serial(fam.members));
}
void BM_TreeInvariants_Parallel(benchmark::State& s) {
  const TreeFamily fam = enumerate_trees(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(tree_invariants(fam.members));
}
BENCHMARK(BM_TreeInvariants_Serial)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TreeInvariants_Parallel)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_Maximal_Serial(benchmark::State& s) {
  const TreeFamily fam = family(static_cast<std::size_t>(s.range(0)), static_cast<std::uint32_t>(s.range(1)));
  for (auto _ : s) benchmark::DoNotOptimize(maximal_elements_serial(fam));
}
void BM_Maximal_Parallel(benchmark::State& s) {
  const TreeFamily fam = family(static_cast<std::size_t>(s.range(0)), static_cast<std::uint32_t>(s.range(1)));
  for (auto _ : s) benchmark::DoNotOptimize(maximal_elements(fam));
}
BENCHMARK(BM_Maximal_Serial)->Args({14, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Maximal_Parallel)->Args({14, 6})->Unit(benchmark::kMillisecond);

void BM_MatesOp1_Serial(benchmark::State& s) {
  const TreeFamily fam = enumerate_trees(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(mates_op1_serial(fam));
}
void BM_MatesOp1_Parallel(benchmark::State& s) {
  const TreeFamily fam = enumerate_trees(static_cast<std::size_t>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(mates_op1(fam));
}
BENCHMARK(BM_MatesOp1_Serial)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatesOp1_Parallel)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
