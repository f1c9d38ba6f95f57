#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loscov/analytic.hpp"
#include "loscov/coverage.hpp"
#include "loscov/rng.hpp"
#include "loscov/sampling.hpp"

namespace loscov {

enum class CoverageMode { rsu_only, rsu_plus_relay };

// Monte Carlo estimate of a mean area fraction via the probability that the
// origin is covered (the coverage process is stationary, so the two agree).
struct CoverageEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sqrt(mean (1 - mean) / n_scenes)
  std::uint64_t n_scenes = 0;
  RandomSeed seed;
  CoverageMode mode = CoverageMode::rsu_only;
  RelayMode relay_mode = RelayMode::approximate_uniform;
  SimRegion region = SimRegion::origin_window;
};

struct McSettings {
  SimRegion region = SimRegion::origin_window;
  RelayMode relay_mode = RelayMode::approximate_uniform;
  double disk_radius = 10000.0;
  unsigned threads = 0;  // 0: use available parallelism
};

// Fraction of scenes whose origin is covered. Scene i draws from substreams
// keyed by (seed, i), so results are bit-identical for any thread count.
CoverageEstimate estimate_area_fraction(const ScenarioParams& params,
                                        CoverageMode mode, const McSettings& mc,
                                        std::uint64_t n_scenes, RandomSeed seed);

// Both coverage modes evaluated on the same scenes (common random numbers;
// relay draws come from separate substreams, so the transmitter-only result
// is unchanged by enabling relays). The gain ratio carries a delta-method
// standard error that accounts for the positive pairing covariance.
struct PairedGainEstimate {
  CoverageEstimate rsu;
  CoverageEstimate rsu_relay;
  std::optional<double> ratio;  // empty when the rsu mean is zero
  double ratio_std_error = 0.0;
};

PairedGainEstimate paired_gain_estimate(const ScenarioParams& params,
                                        const McSettings& mc,
                                        std::uint64_t n_scenes, RandomSeed seed);

enum class SweepAxis { lambda_l, mu, mu_v, gamma, eta };

std::string axis_name(SweepAxis axis);

// One-axis parameter sweep. Row r uses seed.substream(r), so each row is
// reproducible in isolation.
struct SweepSpec {
  ScenarioParams base;
  SweepAxis axis = SweepAxis::gamma;
  std::vector<double> values;
  std::uint64_t n_scenes = 100000;
  RandomSeed seed;
  McSettings mc;
  QuadratureSettings quad;
};

struct SweepRow {
  double axis_value = 0.0;
  PairedGainEstimate mc;
  double thm1 = 0.0;      // transmitter-only closed form
  double thm2 = 0.0;      // transmitter-plus-relay quadrature (NaN on failure)
  double additive = 0.0;
  double gamma_err = 0.0;  // additive error, consistent variant
  double ratio = 0.0;      // thm2 / thm1 (NaN when undefined)
  bool quad_ok = true;
  double thm2_error_bound = 0.0;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

}  // namespace loscov
