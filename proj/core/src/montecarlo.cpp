#include "loscov/montecarlo.hpp"

#include <cmath>
#include <thread>

namespace loscov {

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

SceneOptions scene_options(const McSettings& mc, bool with_relays) {
  SceneOptions opt;
  opt.region = mc.region;
  opt.disk_radius = mc.disk_radius;
  opt.with_relays = with_relays;
  opt.relay_mode = mc.relay_mode;
  return opt;
}

struct PairCounts {
  std::uint64_t rsu = 0;
  std::uint64_t joint = 0;
};

PairCounts count_covered(const ScenarioParams& params, const SceneOptions& opt,
                         RandomSeed seed, std::uint64_t begin, std::uint64_t end) {
  PairCounts counts;
  for (std::uint64_t i = begin; i < end; ++i) {
    const Scene scene = build_scene(params, opt, seed.substream(i));
    const bool rsu = origin_covered(scene.rsu_segments, params.eta);
    const bool joint = rsu || origin_covered(scene.relay_segments, params.eta);
    counts.rsu += rsu;
    counts.joint += joint;
  }
  return counts;
}

// Scenes are independent tasks; the reduction is an integer sum, so the
// result does not depend on how work is split across threads.
PairCounts count_parallel(const ScenarioParams& params, const SceneOptions& opt,
                          RandomSeed seed, std::uint64_t n, unsigned threads) {
  threads = std::max(1u, std::min<unsigned>(resolve_threads(threads),
                                            n > 0 ? static_cast<unsigned>(
                                                        std::min<std::uint64_t>(n, 64))
                                                  : 1));
  if (threads == 1) return count_covered(params, opt, seed, 0, n);

  std::vector<PairCounts> partial(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = n * t / threads;
    const std::uint64_t end = n * (t + 1) / threads;
    workers.emplace_back([&, t, begin, end] {
      partial[t] = count_covered(params, opt, seed, begin, end);
    });
  }
  for (auto& w : workers) w.join();

  PairCounts total;
  for (const PairCounts& c : partial) {
    total.rsu += c.rsu;
    total.joint += c.joint;
  }
  return total;
}

double bernoulli_se(double mean, std::uint64_t n) {
  return n > 0 ? std::sqrt(mean * (1.0 - mean) / static_cast<double>(n)) : 0.0;
}

CoverageEstimate make_estimate(double mean, std::uint64_t n, RandomSeed seed,
                               CoverageMode mode, const McSettings& mc) {
  CoverageEstimate est;
  est.mean = mean;
  est.std_error = bernoulli_se(mean, n);
  est.n_scenes = n;
  est.seed = seed;
  est.mode = mode;
  est.relay_mode = mc.relay_mode;
  est.region = mc.region;
  return est;
}

}  // namespace

CoverageEstimate estimate_area_fraction(const ScenarioParams& params,
                                        CoverageMode mode, const McSettings& mc,
                                        std::uint64_t n_scenes, RandomSeed seed) {
  const bool with_relays = mode == CoverageMode::rsu_plus_relay;
  const PairCounts counts = count_parallel(
      params, scene_options(mc, with_relays), seed, n_scenes, mc.threads);
  const std::uint64_t covered = with_relays ? counts.joint : counts.rsu;
  const double mean =
      n_scenes > 0 ? static_cast<double>(covered) / static_cast<double>(n_scenes)
                   : 0.0;
  return make_estimate(mean, n_scenes, seed, mode, mc);
}

PairedGainEstimate paired_gain_estimate(const ScenarioParams& params,
                                        const McSettings& mc,
                                        std::uint64_t n_scenes, RandomSeed seed) {
  const PairCounts counts =
      count_parallel(params, scene_options(mc, true), seed, n_scenes, mc.threads);
  const double n = static_cast<double>(n_scenes);
  const double p1 = n_scenes > 0 ? static_cast<double>(counts.rsu) / n : 0.0;
  const double p2 = n_scenes > 0 ? static_cast<double>(counts.joint) / n : 0.0;

  PairedGainEstimate out;
  out.rsu = make_estimate(p1, n_scenes, seed, CoverageMode::rsu_only, mc);
  out.rsu_relay = make_estimate(p2, n_scenes, seed, CoverageMode::rsu_plus_relay, mc);
  if (counts.rsu > 0) {
    const double r = p2 / p1;
    // Delta method; joint coverage implies E[I1 I2] = p1 because the rsu
    // indicator never exceeds the joint one.
    const double var1 = p1 * (1.0 - p1) / n;
    const double var2 = p2 * (1.0 - p2) / n;
    const double cov = (p1 - p1 * p2) / n;
    const double var_r = var2 / (p1 * p1) + (p2 * p2) * var1 / (p1 * p1 * p1 * p1) -
                         2.0 * p2 * cov / (p1 * p1 * p1);
    out.ratio = r;
    out.ratio_std_error = std::sqrt(std::max(0.0, var_r));
  }
  return out;
}

}  // namespace loscov
