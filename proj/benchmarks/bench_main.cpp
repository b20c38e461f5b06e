#include <benchmark/benchmark.h>

#include <random>

#include "bispan/extremal.hpp"
#include "bispan/spectral.hpp"
#include "bispan/trees.hpp"
#include "bispan/verify.hpp"

using namespace bispan;

static void BM_SpectralRadiusComplete(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto g = complete_bipartite(side, 2 * side);
  for (auto _ : state) benchmark::DoNotOptimize(signless_spectral_radius(g).value);
}
BENCHMARK(BM_SpectralRadiusComplete)->Arg(4)->Arg(16)->Arg(64);

static void BM_SpectralRadiusRandom(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto side = static_cast<std::size_t>(state.range(0));
  const auto g = random_connected_bipartite(side, 2 * side, 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(signless_spectral_radius(g).value);
}
BENCHMARK(BM_SpectralRadiusRandom)->Arg(3)->Arg(16)->Arg(64);

static void BM_QuotientRoot(benchmark::State& state) {
  const ExtremalParams p{5, 5, 25, 3};
  for (auto _ : state) benchmark::DoNotOptimize(q_family(p));
}
BENCHMARK(BM_QuotientRoot);

static void BM_FlowChecker(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto g = random_connected_bipartite(m, 3 * m, 0.4, rng);
  const auto f = DegreeDemand::uniform(m, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_condition_flow(g, f));
}
BENCHMARK(BM_FlowChecker)->Arg(4)->Arg(8)->Arg(32);

static void BM_BruteForceChecker(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto g = random_connected_bipartite(m, 3 * m, 0.4, rng);
  const auto f = DegreeDemand::uniform(m, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_condition_bruteforce(g, f));
}
BENCHMARK(BM_BruteForceChecker)->Arg(4)->Arg(8)->Arg(12);

static void BM_ConstructTree(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto g = complete_bipartite(m, 2 * m + 1);
  const auto f = DegreeDemand::uniform(m, 3);
  for (auto _ : state) benchmark::DoNotOptimize(construct_tree(g, f));
}
BENCHMARK(BM_ConstructTree)->Arg(3)->Arg(8)->Arg(24);

static void BM_ConstructTreeSequencesOnly(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto g = complete_bipartite(m, 2 * m + 1);
  const auto f = DegreeDemand::uniform(m, 3);
  ConstructOptions opts;
  opts.local_search = false;
  for (auto _ : state) benchmark::DoNotOptimize(construct_tree(g, f, opts));
}
BENCHMARK(BM_ConstructTreeSequencesOnly)->Arg(3)->Arg(8)->Arg(24);

BENCHMARK_MAIN();
