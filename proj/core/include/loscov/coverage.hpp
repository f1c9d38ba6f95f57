#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "loscov/geometry.hpp"
#include "loscov/rng.hpp"
#include "loscov/sampling.hpp"

namespace loscov {

// How a relay is chosen inside its parent's LOS segment.
//   approximate_uniform: a point uniform on the segment (valid when the
//     vehicle density is much larger than the transmitter density).
//   exact_vehicle: uniform among the sampled vehicles inside the segment;
//     a segment with no vehicle yields no relay.
enum class RelayMode { approximate_uniform, exact_vehicle };

// Simulation region for a scene.
//   disk: lines in a disk of a given radius, transmitters on the full chords.
//   origin_window: only lines that can reach the origin (|offset| <= eta/2)
//     with transmitters restricted to an abscissa window around the foot
//     point; statistically equivalent for origin-coverage queries.
enum class SimRegion { disk, origin_window };

// 1-D LOS interval [anchor - left_extent, anchor + right_extent] on a line,
// in foot-point frame coordinates. Extruding by eta/2 on both sides of the
// line gives the transmitter's coverage rectangle.
struct LosSegment {
  Line line;
  std::size_t line_index = 0;
  double anchor = 0.0;
  double left_extent = 0.0;
  double right_extent = 0.0;

  double lo() const { return anchor - left_extent; }
  double hi() const { return anchor + right_extent; }

  CoverageRect rect(double eta) const {
    return CoverageRect{line, lo(), hi(), eta / 2.0};
  }
};

// One selected relay: its line, abscissa, and the index of the parent
// segment in Scene::rsu_segments.
struct RelayAnchor {
  std::size_t line_index = 0;
  double s = 0.0;
  std::size_t parent = 0;
};

// One sampled network realization. Abscissas are stored exactly; plane
// coordinates are derived only on export.
struct Scene {
  ScenarioParams params;
  RandomSeed seed;
  SimRegion region = SimRegion::origin_window;
  double region_radius = 0.0;  // disk radius, or eta/2 for the window strip
  RelayMode relay_mode = RelayMode::approximate_uniform;

  std::vector<Line> lines;
  std::vector<std::vector<double>> rsus;      // per-line abscissas, draw order
  std::vector<std::vector<double>> vehicles;  // per-line abscissas, sorted
  std::vector<LosSegment> rsu_segments;       // grouped by line, RSU order
  std::vector<RelayAnchor> relay_anchors;
  std::vector<LosSegment> relay_segments;
};

struct SceneOptions {
  SimRegion region = SimRegion::origin_window;
  double disk_radius = 10000.0;
  // origin_window cutoffs: RSUs within window_multiplier * gamma of the foot
  // point, vehicles (relay reach) within twice that.
  double window_multiplier = 12.0;
  bool manhattan = false;
  bool with_vehicles = false;
  bool with_relays = false;
  RelayMode relay_mode = RelayMode::approximate_uniform;
};

// Samples lines, transmitters and (if requested) vehicles, then builds LOS
// segments and relays. Fully deterministic in (params, options, seed).
Scene build_scene(const ScenarioParams& params, const SceneOptions& options,
                  RandomSeed scene_seed);

// One LOS segment per RSU with fresh independent extents (drawn from the
// per-line rsu_los substream of scene.seed). Requires lines and rsus.
void build_rsu_segments(Scene& scene);

// One relay per RSU segment where the mode admits one. Every returned anchor
// lies inside its parent segment.
std::vector<RelayAnchor> select_relays(const Scene& scene, RelayMode mode);

// Fresh LOS extents for each relay; no clipping against the parent segment.
std::vector<LosSegment> build_relay_segments(const Scene& scene,
                                             std::span<const RelayAnchor> anchors);

// True iff some segment's coverage rectangle of half-width eta/2 contains
// the origin, i.e. |line offset| <= eta/2 and lo <= 0 <= hi.
bool origin_covered(std::span<const LosSegment> segments, double eta);

enum class SceneFormat { ndjson, csv };

// Serializes the scene (params and seed in a header record, then one record
// per line / rsu / vehicle / relay / segment / rect).
void export_scene(const Scene& scene, SceneFormat format, std::ostream& out);

}  // namespace loscov
