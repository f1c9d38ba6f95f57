#include <benchmark/benchmark.h>

#include "loscov/montecarlo.hpp"

namespace {

using namespace loscov;

const ScenarioParams kUrban{5e-3, 2e-3, 25e-3, 100.0, 100.0, 10.0};

void WindowEstimate(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  McSettings mc;
  mc.threads = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto est = estimate_area_fraction(kUrban, CoverageMode::rsu_only, mc, n,
                                      RandomSeed{seed++, 0});
    benchmark::DoNotOptimize(est);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(WindowEstimate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void PairedEstimate(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  McSettings mc;
  mc.threads = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto est = paired_gain_estimate(kUrban, mc, n, RandomSeed{seed++, 0});
    benchmark::DoNotOptimize(est);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(PairedEstimate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void DiskEstimate(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  McSettings mc;
  mc.threads = 1;
  mc.region = SimRegion::disk;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto est = estimate_area_fraction(kUrban, CoverageMode::rsu_only, mc, n,
                                      RandomSeed{seed++, 0});
    benchmark::DoNotOptimize(est);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(DiskEstimate)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
