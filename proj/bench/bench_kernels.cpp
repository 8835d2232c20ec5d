// Serial reference kernels against their bitmask / OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "forcelab/forcing.hpp"
#include "forcelab/forts.hpp"
#include "forcelab/generators.hpp"
#include "forcelab/solver.hpp"
#include "mask_kernel.hpp"
#include "random_graph.hpp"

using namespace forcelab;

namespace {

std::vector<VertexSet> sample_sets(const Graph& g, std::size_t count) {
  std::mt19937_64 rng(3);
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < count; ++i) sets.push_back(testing::random_subset(g.order(), 0.2, rng));
  return sets;
}

void BM_ClosureWorklist(benchmark::State& state) {
  const Graph g = make_web({static_cast<int>(state.range(0)), 3});
  const auto sets = sample_sets(g, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(closure(g, sets[i++ % sets.size()]));
}

void BM_ClosureMask(benchmark::State& state) {
  const Graph g = make_web({static_cast<int>(state.range(0)), 3});
  const detail::MaskGraph mg(g);
  std::vector<std::uint64_t> masks;
  for (const auto& s : sample_sets(g, 256)) masks.push_back(detail::to_mask(s));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(mg.closure(masks[i++ % masks.size()]));
}

Graph solver_graph() { return make_peony({3, 3, 1}); }

void BM_ExhaustiveSerial(benchmark::State& state) {
  const Graph g = solver_graph();
  for (auto _ : state) benchmark::DoNotOptimize(solve_exhaustive_serial(g).z);
}

void BM_ExhaustiveParallel(benchmark::State& state) {
  const Graph g = solver_graph();
  SolveOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_exhaustive(g, opts).z);
}

void BM_FortBB(benchmark::State& state) {
  const Graph g = solver_graph();
  for (auto _ : state) benchmark::DoNotOptimize(solve_fortbb(g).z);
}

void BM_FortsSerial(benchmark::State& state) {
  const Graph g = make_web({5, 2});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal_forts_serial(g, 8).size());
}

void BM_FortsParallel(benchmark::State& state) {
  const Graph g = make_web({5, 2});
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal_forts(g, 8, 20, threads).size());
}

}  // namespace

BENCHMARK(BM_ClosureWorklist)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_ClosureMask)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(BM_ExhaustiveSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FortBB)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FortsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FortsParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
