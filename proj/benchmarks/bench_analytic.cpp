#include <benchmark/benchmark.h>

#include <cmath>

#include "loscov/analytic.hpp"

namespace {

using namespace loscov;

void ClosedForms(benchmark::State& state) {
  double acc = 0.0;
  for (auto _ : state) {
    acc += rsu_area_fraction(5e-3, 2e-3, 100.0, 100.0).value;
    acc += road_area_fraction(5e-3, 100.0).value;
    acc += additive_error(5e-3, 2e-3, 100.0, 100.0);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(ClosedForms);

void PairReachQuadrature(benchmark::State& state) {
  QuadratureSettings settings;
  settings.rel_tol = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    const double v = pair_reach_integral(100.0, settings);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(PairReachQuadrature)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void JointFraction(benchmark::State& state) {
  for (auto _ : state) {
    const auto v = rsu_relay_area_fraction(5e-3, 2e-3, 100.0, 100.0);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(JointFraction)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
