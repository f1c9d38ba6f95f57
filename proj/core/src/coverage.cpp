#include "loscov/coverage.hpp"

#include <algorithm>
#include <cmath>

namespace loscov {

namespace {

// Abscissa half-window on a line for transmitter sampling.
double sampling_halfwidth(const Scene& scene, const Line& line,
                          double window_multiplier) {
  if (scene.region == SimRegion::disk) {
    const double r = scene.region_radius;
    const double d = line.offset();
    const double h2 = r * r - d * d;
    return h2 > 0.0 ? std::sqrt(h2) : 0.0;
  }
  return window_multiplier * scene.params.gamma;
}

}  // namespace

Scene build_scene(const ScenarioParams& params, const SceneOptions& options,
                  RandomSeed scene_seed) {
  Scene scene;
  scene.params = params;
  scene.seed = scene_seed;
  scene.region = options.region;
  scene.relay_mode = options.relay_mode;

  const double line_radius = options.region == SimRegion::disk
                                 ? options.disk_radius
                                 : params.eta / 2.0;
  scene.region_radius = line_radius;
  scene.lines = options.manhattan
                    ? sample_lines_manhattan(params, line_radius, scene_seed)
                    : sample_lines_disk(params, line_radius, scene_seed);

  const bool need_vehicles =
      options.with_vehicles ||
      (options.with_relays && options.relay_mode == RelayMode::exact_vehicle);

  scene.rsus.resize(scene.lines.size());
  scene.vehicles.resize(scene.lines.size());
  for (std::size_t i = 0; i < scene.lines.size(); ++i) {
    const double hw = sampling_halfwidth(scene, scene.lines[i], options.window_multiplier);
    {
      StreamRng rng = role_rng(scene_seed, i, StreamRole::rsu);
      scene.rsus[i] = sample_points_on_line(params.mu, -hw, hw, rng);
    }
    if (need_vehicles) {
      // Relays sit inside their parent's segment, so vehicles beyond twice
      // the RSU window cannot matter at the stated truncation error.
      const double vhw = scene.region == SimRegion::disk ? hw : 2.0 * hw;
      StreamRng rng = role_rng(scene_seed, i, StreamRole::vehicle);
      scene.vehicles[i] = sample_points_on_line(params.mu_v, -vhw, vhw, rng);
      std::sort(scene.vehicles[i].begin(), scene.vehicles[i].end());
    }
  }

  build_rsu_segments(scene);
  if (options.with_relays) {
    scene.relay_anchors = select_relays(scene, options.relay_mode);
    scene.relay_segments = build_relay_segments(scene, scene.relay_anchors);
  }
  return scene;
}

void build_rsu_segments(Scene& scene) {
  scene.rsu_segments.clear();
  std::size_t total = 0;
  for (const auto& r : scene.rsus) total += r.size();
  scene.rsu_segments.reserve(total);
  for (std::size_t i = 0; i < scene.lines.size(); ++i) {
    StreamRng rng = role_rng(scene.seed, i, StreamRole::rsu_los);
    for (double s : scene.rsus[i]) {
      const auto [w, v] = sample_los_extents(scene.params.gamma, rng);
      scene.rsu_segments.push_back(LosSegment{scene.lines[i], i, s, w, v});
    }
  }
}

std::vector<RelayAnchor> select_relays(const Scene& scene, RelayMode mode) {
  std::vector<RelayAnchor> anchors;
  anchors.reserve(scene.rsu_segments.size());
  std::size_t seg_index = 0;
  for (std::size_t i = 0; i < scene.lines.size(); ++i) {
    StreamRng rng = role_rng(scene.seed, i, StreamRole::relay_select);
    for (; seg_index < scene.rsu_segments.size() &&
           scene.rsu_segments[seg_index].line_index == i;
         ++seg_index) {
      const LosSegment& seg = scene.rsu_segments[seg_index];
      const double u = rng.uniform01();  // one draw per RSU in either mode
      if (mode == RelayMode::approximate_uniform) {
        const double s = seg.lo() + u * (seg.hi() - seg.lo());
        anchors.push_back(RelayAnchor{i, s, seg_index});
      } else {
        const auto& veh = scene.vehicles[i];
        const auto first = std::lower_bound(veh.begin(), veh.end(), seg.lo());
        const auto last = std::upper_bound(first, veh.end(), seg.hi());
        const auto count = static_cast<std::size_t>(last - first);
        if (count == 0) continue;  // no candidate vehicle: no relay
        auto pick = static_cast<std::size_t>(u * static_cast<double>(count));
        if (pick >= count) pick = count - 1;
        anchors.push_back(RelayAnchor{i, *(first + pick), seg_index});
      }
    }
  }
  return anchors;
}

std::vector<LosSegment> build_relay_segments(const Scene& scene,
                                             std::span<const RelayAnchor> anchors) {
  std::vector<LosSegment> segments;
  segments.reserve(anchors.size());
  std::size_t a = 0;
  for (std::size_t i = 0; i < scene.lines.size(); ++i) {
    StreamRng rng = role_rng(scene.seed, i, StreamRole::relay_los);
    for (; a < anchors.size() && anchors[a].line_index == i; ++a) {
      const auto [w, v] = sample_los_extents(scene.params.gamma, rng);
      segments.push_back(LosSegment{scene.lines[i], i, anchors[a].s, w, v});
    }
  }
  return segments;
}

bool origin_covered(std::span<const LosSegment> segments, double eta) {
  const double half = eta / 2.0;
  return std::any_of(segments.begin(), segments.end(), [half](const LosSegment& seg) {
    return std::fabs(seg.line.offset()) <= half && seg.lo() <= 0.0 && 0.0 <= seg.hi();
  });
}

}  // namespace loscov
