#include <benchmark/benchmark.h>

#include "burnlab/cactus.hpp"
#include "burnlab/ditree.hpp"
#include "burnlab/gen.hpp"
#include "burnlab/oracles.hpp"

namespace {

using namespace burnlab;

GenSpec spec(GraphClass cls, std::int64_t n) {
  GenSpec s;
  s.cls = cls;
  s.n = static_cast<std::size_t>(n);
  s.seed = 1;
  return s;
}

void BM_ApproxCactus(benchmark::State& state) {
  const auto g = random_cactus(spec(GraphClass::kCactus, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(approx_cactus(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApproxCactus)->RangeMultiplier(10)->Range(300, 30000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Baseline3(benchmark::State& state) {
  const auto g = random_cactus(spec(GraphClass::kCactus, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(baseline_3approx(g));
}
BENCHMARK(BM_Baseline3)->RangeMultiplier(10)->Range(300, 30000)->Unit(benchmark::kMillisecond);

void BM_ApproxPolytree(benchmark::State& state) {
  const auto t = random_polytree(spec(GraphClass::kPolytree, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(approx_polytree(t));
}
BENCHMARK(BM_ApproxPolytree)->RangeMultiplier(10)->Range(1000, 10000)->Unit(benchmark::kMillisecond);

void BM_ApproxArborescence(benchmark::State& state) {
  const auto t = random_arborescence(spec(GraphClass::kArborescence, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(approx_arborescence(t));
}
BENCHMARK(BM_ApproxArborescence)->RangeMultiplier(10)->Range(1000, 10000)->Unit(benchmark::kMillisecond);

// Full peel of a long chain: one vertex per round.
void BM_BCutting(benchmark::State& state) {
  const auto t = random_arborescence(spec(GraphClass::kArborescence, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(b_cutting(t, state.range(0)).size());
}
BENCHMARK(BM_BCutting)->Arg(1000)->Arg(10000);

void BM_ExactCactus(benchmark::State& state) {
  GenSpec s = spec(GraphClass::kCactus, state.range(0));
  s.cycle_fraction = 0.25;
  const auto g = random_cactus(s);
  for (auto _ : state) benchmark::DoNotOptimize(exact_burning_number(g));
}
BENCHMARK(BM_ExactCactus)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
