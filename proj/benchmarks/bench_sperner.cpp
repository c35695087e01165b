#include <benchmark/benchmark.h>

#include "sperner/constructions.hpp"
#include "sperner/lattice.hpp"
#include "sperner/oversat.hpp"
#include "sperner/search.hpp"
#include "sperner/verify.hpp"

using namespace sperner;

static void BM_CountChains(benchmark::State& state) {
  const Family f = epsilon_pipeline(static_cast<unsigned>(state.range(0)));
  const std::size_t len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_chains(f, len));
  state.counters["sets"] = static_cast<double>(f.size());
}
BENCHMARK(BM_CountChains)->DenseRange(6, 10, 2);

static void BM_SubsetSweep(benchmark::State& state) {
  const Family f = powerset_construction(6, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    SubsetSweep sweep(f, kDefaultMaxN);
    benchmark::DoNotOptimize(sweep.below(sweep.subset_count() - 1));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}
BENCHMARK(BM_SubsetSweep)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_IsSaturated(benchmark::State& state) {
  const Family f = epsilon_pipeline(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_saturated(f, static_cast<unsigned>(state.range(0))).verdict);
  state.counters["n"] = static_cast<double>(f.n());
}
BENCHMARK(BM_IsSaturated)->DenseRange(6, 10, 1)->Unit(benchmark::kMillisecond);

static void BM_Combine(benchmark::State& state) {
  const Family six = six_sperner(8);
  CombineOptions options;
  options.checks = Checks::trust;
  for (auto _ : state) benchmark::DoNotOptimize(combine(six, six, options).size());
}
BENCHMARK(BM_Combine);

static void BM_CanonicalDecomposition(benchmark::State& state) {
  const Family f = epsilon_pipeline(10);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_decomposition(f).size());
}
BENCHMARK(BM_CanonicalDecomposition);

static void BM_OversatConstruction(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oversat_construction(k, FunProfile::desk(), seed++).family.size());
}
BENCHMARK(BM_OversatConstruction)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_GreedySaturated(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_greedy_saturated(10, 3, seed++).size());
}
BENCHMARK(BM_GreedySaturated)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
