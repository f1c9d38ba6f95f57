#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "loscov/geometry.hpp"
#include "loscov/rng.hpp"

namespace loscov {

// Scenario parameter vector. All intensities are per meter and all lengths
// are meters; the CLI converts from the per-km units used in configuration.
struct ScenarioParams {
  double lambda_l = 0.0;  // road line intensity
  double mu = 0.0;        // transmitter (RSU) intensity on a line
  double mu_v = 0.0;      // vehicle intensity on a line
  double gamma = 0.0;     // mean LOS distance before blockage
  double eta = 0.0;       // road width
  double speed = 0.0;     // vehicle speed, carried as scene metadata only
};

// Draw roles. Every (scene seed, line index, role) triple owns an
// independent substream, so enabling vehicles or relays never perturbs the
// RSU draws of the same scene; this is what makes paired estimates with
// common random numbers possible.
enum class StreamRole : std::uint64_t {
  layout = 1,        // line offsets and angles
  rsu = 2,           // RSU abscissas on a line
  vehicle = 3,       // vehicle abscissas on a line
  rsu_los = 4,       // RSU LOS extents (W, V)
  relay_select = 5,  // relay choice per RSU
  relay_los = 6,     // relay LOS extents (W', V')
};

StreamRng layout_rng(RandomSeed scene_seed);
StreamRng role_rng(RandomSeed scene_seed, std::size_t line_index, StreamRole role);

// Isotropic Poisson line process restricted to |offset| < radius: the line
// count is Poisson with mean 2 * lambda_l * radius, offsets are i.i.d.
// uniform on (-radius, radius) and angles i.i.d. uniform on [0, pi).
std::vector<Line> sample_lines_disk(const ScenarioParams& params, double radius,
                                    RandomSeed seed);

// Manhattan variant: same offset law, angles 0 or pi/2 with equal probability.
std::vector<Line> sample_lines_manhattan(const ScenarioParams& params,
                                         double radius, RandomSeed seed);

// 1-D Poisson process of the given intensity on [lo, hi] (abscissas, in
// sampling order). Used for both RSUs and vehicles.
std::vector<double> sample_points_on_line(double intensity, double lo,
                                          double hi, StreamRng& rng);
std::vector<double> sample_points_on_line(double intensity, double lo,
                                          double hi, RandomSeed seed);

// One pair of independent exponential LOS distances with mean gamma;
// gamma = 0 yields (0, 0).
std::pair<double, double> sample_los_extents(double gamma, StreamRng& rng);
std::pair<double, double> sample_los_extents(double gamma, RandomSeed seed);

}  // namespace loscov
