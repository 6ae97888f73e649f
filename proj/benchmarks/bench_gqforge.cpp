#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "gqforge/catalog.hpp"
#include "gqforge/construction.hpp"
#include "gqforge/sieve.hpp"
#include "gqforge/suzuki.hpp"

using namespace gqforge;

// Includes building the root table for every prime up to the window end.
static void BM_SieveWindowAt1e8(benchmark::State& state) {
  const auto width = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t n = 0;
    sieve_range(100'000'000, 100'000'000 + width - 1, {}, [&](const SieveVerdict&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(width));
}
BENCHMARK(BM_SieveWindowAt1e8)->Arg(1 << 16)->Arg(1 << 22)->Unit(benchmark::kMillisecond);

static void BM_SieveToMillion(benchmark::State& state) {
  SieveOptions options;
  options.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_range(2, 1'000'000, options, [](const SieveVerdict&) {}));
}
BENCHMARK(BM_SieveToMillion)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

// The full range to 10^8; registered only when GQFORGE_BENCH_FULL_SIEVE is set.
static void BM_SieveTo1e8(benchmark::State& state) {
  SieveOptions options;
  options.threads = std::max(1U, std::thread::hardware_concurrency());
  for (auto _ : state) {
    const auto summary = sieve_range(2, 100'000'000, options, [](const SieveVerdict&) {});
    state.counters["survivors"] = static_cast<double>(summary.survivors);
  }
}

static void BM_RegregConditions(benchmark::State& state) {
  std::uint64_t s = 1'000'000'000;  // s+1 coprime to 6 for every step
  for (auto _ : state) {
    benchmark::DoNotOptimize(regreg_conditions(s));
    s += 6;
  }
}
BENCHMARK(BM_RegregConditions);

static void BM_AutomorphismsW3(benchmark::State& state) {
  const auto q = symplectic_gq(3);
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(q).order());
}
BENCHMARK(BM_AutomorphismsW3)->Unit(benchmark::kMillisecond);

static void BM_SearchSigmaOrder40(benchmark::State& state) {
  const auto g = cyclic_group(40);
  for (auto _ : state) benchmark::DoNotOptimize(search_sigma(g, false).size());
}
BENCHMARK(BM_SearchSigmaOrder40)->Unit(benchmark::kMillisecond);

static void BM_RegularSubgroupsPayne(benchmark::State& state) {
  const auto q = catalog_fixture("payne-w3");
  for (auto _ : state) benchmark::DoNotOptimize(regular_subgroups(q, 27, RegularityMode::Points).size());
}
BENCHMARK(BM_RegularSubgroupsPayne)->Iterations(1)->Unit(benchmark::kSecond);

static void BM_SzFeasibility(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t n = 0;
    for (std::uint64_t s = 3; s <= 10'000; s += 2) {
      if ((s + 1) % 3 != 0) n += sz_feasibility(s).candidates.size();
    }
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_SzFeasibility)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  if (std::getenv("GQFORGE_BENCH_FULL_SIEVE") != nullptr) {
    benchmark::RegisterBenchmark("BM_SieveTo1e8", BM_SieveTo1e8)->Iterations(1)->Unit(benchmark::kSecond);
  }
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
