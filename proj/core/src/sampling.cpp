#include "loscov/sampling.hpp"

#include <numbers>

namespace loscov {

namespace {

constexpr std::uint64_t kDomainTag = 0x4C4F53434F56ull;  // project tag
constexpr std::uint64_t kLayoutLine = ~std::uint64_t{0};

std::uint64_t scene_key(RandomSeed seed) {
  return rngdetail::chain(rngdetail::chain(seed.value, kDomainTag), seed.stream);
}

std::uint64_t stream_key(RandomSeed seed, std::uint64_t line_index,
                         StreamRole role) {
  return rngdetail::chain(rngdetail::chain(scene_key(seed), line_index),
                          static_cast<std::uint64_t>(role));
}

template <class AngleFn>
std::vector<Line> sample_lines(const ScenarioParams& params, double radius,
                               RandomSeed seed, AngleFn&& angle_of) {
  StreamRng rng = layout_rng(seed);
  const double mean = 2.0 * params.lambda_l * radius;
  const std::uint64_t n = rng.poisson(mean);
  std::vector<Line> lines;
  lines.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double offset = rng.uniform(-radius, radius);
    const double angle = angle_of(rng);
    lines.emplace_back(offset, angle);
  }
  return lines;
}

}  // namespace

StreamRng layout_rng(RandomSeed scene_seed) {
  return make_rng(stream_key(scene_seed, kLayoutLine, StreamRole::layout));
}

StreamRng role_rng(RandomSeed scene_seed, std::size_t line_index,
                   StreamRole role) {
  return make_rng(stream_key(scene_seed, line_index, role));
}

std::vector<Line> sample_lines_disk(const ScenarioParams& params, double radius,
                                    RandomSeed seed) {
  return sample_lines(params, radius, seed, [](StreamRng& rng) {
    return rng.uniform(0.0, std::numbers::pi);
  });
}

std::vector<Line> sample_lines_manhattan(const ScenarioParams& params,
                                         double radius, RandomSeed seed) {
  return sample_lines(params, radius, seed, [](StreamRng& rng) {
    return rng.uniform01() < 0.5 ? 0.0 : std::numbers::pi / 2.0;
  });
}

std::vector<double> sample_points_on_line(double intensity, double lo,
                                          double hi, StreamRng& rng) {
  const double length = hi - lo;
  std::vector<double> points;
  if (length <= 0.0 || intensity <= 0.0) return points;
  const std::uint64_t n = rng.poisson(intensity * length);
  points.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) points.push_back(rng.uniform(lo, hi));
  return points;
}

std::vector<double> sample_points_on_line(double intensity, double lo,
                                          double hi, RandomSeed seed) {
  StreamRng rng = make_rng(rngdetail::chain(scene_key(seed), 0));
  return sample_points_on_line(intensity, lo, hi, rng);
}

std::pair<double, double> sample_los_extents(double gamma, StreamRng& rng) {
  const double w = rng.exponential(gamma);
  const double v = rng.exponential(gamma);
  return {w, v};
}

std::pair<double, double> sample_los_extents(double gamma, RandomSeed seed) {
  StreamRng rng = make_rng(rngdetail::chain(scene_key(seed), 1));
  return sample_los_extents(gamma, rng);
}

}  // namespace loscov
