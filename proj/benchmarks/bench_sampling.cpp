#include <benchmark/benchmark.h>

#include "loscov/coverage.hpp"
#include "loscov/sampling.hpp"

namespace {

using namespace loscov;

const ScenarioParams kUrban{5e-3, 2e-3, 25e-3, 100.0, 100.0, 10.0};

void DiskLineProcess(benchmark::State& state) {
  const double radius = static_cast<double>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto lines = sample_lines_disk(kUrban, radius, RandomSeed{seed++, 0});
    benchmark::DoNotOptimize(lines);
  }
}
BENCHMARK(DiskLineProcess)->Arg(1000)->Arg(10000);

void PointsOnLine(benchmark::State& state) {
  const double half = static_cast<double>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    StreamRng rng = role_rng(RandomSeed{seed++, 0}, 0, StreamRole::vehicle);
    auto pts = sample_points_on_line(25e-3, -half, half, rng);
    benchmark::DoNotOptimize(pts);
  }
}
BENCHMARK(PointsOnLine)->Arg(500)->Arg(10000);

void WindowSceneBuild(benchmark::State& state) {
  SceneOptions opt;
  opt.with_relays = state.range(0) != 0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Scene s = build_scene(kUrban, opt, RandomSeed{seed++, 0});
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(WindowSceneBuild)->Arg(0)->Arg(1);

void DiskSceneBuild(benchmark::State& state) {
  SceneOptions opt;
  opt.region = SimRegion::disk;
  opt.disk_radius = static_cast<double>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    Scene s = build_scene(kUrban, opt, RandomSeed{seed++, 0});
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(DiskSceneBuild)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

}  // namespace
