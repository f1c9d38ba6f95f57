#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <sstream>

#include "loscov/coverage.hpp"
#include "support/stats.hpp"

using namespace loscov;
using testsupport::ks_uniform_pvalue;

namespace {

const ScenarioParams kUrban{5e-3, 2e-3, 25e-3, 100.0, 100.0, 10.0};

RandomSeed seed_of(int i, std::uint64_t stream = 0) {
  return RandomSeed{static_cast<std::uint64_t>(i), stream};
}

// Scene with one line through the origin carrying one RSU at the foot point
// whose segment extents are pinned, plus optional vehicles.
Scene pinned_scene(double w, double v, std::vector<double> vehicles,
                   RandomSeed seed) {
  Scene s;
  s.params = kUrban;
  s.seed = seed;
  s.lines = {Line(0.0, 0.0)};
  s.rsus = {{0.0}};
  std::sort(vehicles.begin(), vehicles.end());
  s.vehicles = {std::move(vehicles)};
  s.rsu_segments = {LosSegment{s.lines[0], 0, 0.0, w, v}};
  return s;
}

}  // namespace

TEST_CASE("rsu segments: empty, degenerate and mean length") {
  ScenarioParams p = kUrban;
  p.mu = 0.0;
  const Scene none = build_scene(p, SceneOptions{}, seed_of(1));
  CHECK(none.rsu_segments.empty());

  ScenarioParams flat = kUrban;
  flat.gamma = 0.0;
  SceneOptions disk_opt;
  disk_opt.region = SimRegion::disk;
  disk_opt.disk_radius = 2000.0;
  const Scene degen = build_scene(flat, disk_opt, seed_of(2));
  for (const LosSegment& seg : degen.rsu_segments) {
    CHECK(seg.left_extent == 0.0);
    CHECK(seg.right_extent == 0.0);
    CHECK(seg.lo() == seg.hi());
  }

  // E[W + V] = 2 gamma
  double total = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    Scene s = pinned_scene(0.0, 0.0, {}, seed_of(i, 11));
    s.rsu_segments.clear();
    build_rsu_segments(s);
    REQUIRE(s.rsu_segments.size() == 1);
    total += s.rsu_segments[0].hi() - s.rsu_segments[0].lo();
  }
  CHECK(total / n == doctest::Approx(200.0).epsilon(0.005));
}

TEST_CASE("relay selection: trivial cases") {
  ScenarioParams p = kUrban;
  p.mu = 0.0;
  SceneOptions opt;
  opt.with_relays = true;
  const Scene s = build_scene(p, opt, seed_of(3));
  CHECK(s.relay_anchors.empty());
  CHECK(s.relay_segments.empty());

  // gamma = 0, exact mode: degenerate segments contain no vehicle
  ScenarioParams flat = kUrban;
  flat.gamma = 0.0;
  SceneOptions exact;
  exact.region = SimRegion::disk;
  exact.disk_radius = 2000.0;
  exact.with_relays = true;
  exact.relay_mode = RelayMode::exact_vehicle;
  int anchors = 0;
  for (int i = 0; i < 50; ++i)
    anchors += static_cast<int>(build_scene(flat, exact, seed_of(i, 12)).relay_anchors.size());
  CHECK(anchors == 0);
}

TEST_CASE("approximate relay is uniform on the segment") {
  std::vector<double> positions;
  positions.reserve(100000);
  for (int i = 0; i < 100000; ++i) {
    const Scene s = pinned_scene(100.0, 100.0, {}, seed_of(i, 13));
    const auto anchors = select_relays(s, RelayMode::approximate_uniform);
    REQUIRE(anchors.size() == 1);
    CHECK(anchors[0].parent == 0);
    positions.push_back(anchors[0].s);
  }
  CHECK(ks_uniform_pvalue(positions, -100.0, 100.0) > 0.01);
}

TEST_CASE("exact relay picks uniformly among in-segment vehicles") {
  int hits[3] = {0, 0, 0};
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    // two of five vehicles fall outside the segment
    const Scene s =
        pinned_scene(50.0, 50.0, {-200.0, -30.0, 0.0, 20.0, 400.0}, seed_of(i, 14));
    const auto anchors = select_relays(s, RelayMode::exact_vehicle);
    REQUIRE(anchors.size() == 1);
    const double a = anchors[0].s;
    CHECK((a == -30.0 || a == 0.0 || a == 20.0));
    if (a == -30.0) ++hits[0];
    if (a == 0.0) ++hits[1];
    if (a == 20.0) ++hits[2];
  }
  for (int h : hits)
    CHECK(static_cast<double>(h) / n == doctest::Approx(1.0 / 3.0).epsilon(0.02));

  // no in-segment vehicle: no relay, and multi-selection of one vehicle is fine
  const Scene empty = pinned_scene(5.0, 5.0, {-200.0, 400.0}, seed_of(1, 15));
  CHECK(select_relays(empty, RelayMode::exact_vehicle).empty());
}

TEST_CASE("relay anchors stay inside the parent segment") {
  for (RelayMode mode : {RelayMode::approximate_uniform, RelayMode::exact_vehicle}) {
    SceneOptions opt;
    opt.with_relays = true;
    opt.relay_mode = mode;
    for (int i = 0; i < 2000; ++i) {
      const Scene s = build_scene(kUrban, opt, seed_of(i, 16));
      for (const RelayAnchor& a : s.relay_anchors) {
        const LosSegment& parent = s.rsu_segments[a.parent];
        CHECK(a.line_index == parent.line_index);
        CHECK(a.s >= parent.lo());
        CHECK(a.s <= parent.hi());
      }
      REQUIRE(s.relay_segments.size() == s.relay_anchors.size());
      for (std::size_t k = 0; k < s.relay_segments.size(); ++k)
        CHECK(s.relay_segments[k].anchor == s.relay_anchors[k].s);
    }
  }
}

TEST_CASE("relay segments mirror rsu segment statistics") {
  double total = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const Scene s = pinned_scene(100.0, 100.0, {}, seed_of(i, 17));
    const auto anchors = select_relays(s, RelayMode::approximate_uniform);
    const auto segs = build_relay_segments(s, anchors);
    REQUIRE(segs.size() == 1);
    total += segs[0].hi() - segs[0].lo();
  }
  CHECK(total / n == doctest::Approx(200.0).epsilon(0.005));
}

TEST_CASE("origin coverage test") {
  CHECK_FALSE(origin_covered({}, 100.0));

  const Line through_origin(0.0, 0.7);
  const LosSegment covers{through_origin, 0, 10.0, 20.0, 0.0};
  std::vector<LosSegment> one{covers};
  CHECK(origin_covered(one, 100.0));

  const LosSegment far_line{Line(100.0, 0.7), 0, 10.0, 20.0, 0.0};
  std::vector<LosSegment> two{far_line};
  CHECK_FALSE(origin_covered(two, 100.0));

  // agrees with the rectangle containment primitive
  StreamRng rng = make_rng(0x5E60);
  for (int i = 0; i < 5000; ++i) {
    const LosSegment seg{Line(rng.uniform(-120.0, 120.0), rng.uniform(0.0, 3.0)), 0,
                         rng.uniform(-300.0, 300.0), rng.exponential(80.0),
                         rng.exponential(80.0)};
    std::vector<LosSegment> segs{seg};
    CHECK(origin_covered(segs, 100.0) == contains_origin(seg.rect(100.0)));
  }
}

TEST_CASE("adding relay segments never uncovers the origin") {
  SceneOptions opt;
  opt.with_relays = true;
  int flipped = 0;
  int gained = 0;
  for (int i = 0; i < 2000; ++i) {
    const Scene s = build_scene(kUrban, opt, seed_of(i, 18));
    const bool rsu = origin_covered(s.rsu_segments, kUrban.eta);
    std::vector<LosSegment> all(s.rsu_segments.begin(), s.rsu_segments.end());
    all.insert(all.end(), s.relay_segments.begin(), s.relay_segments.end());
    const bool joint = origin_covered(all, kUrban.eta);
    if (rsu && !joint) ++flipped;
    if (!rsu && joint) ++gained;
  }
  CHECK(flipped == 0);
  CHECK(gained > 0);
}

TEST_CASE("relay modes agree when vehicles are dense") {
  // mu_v = 25 mu, gamma >= 50: the uniform-point approximation holds
  ScenarioParams p{5e-3, 1e-3, 25e-3, 100.0, 100.0, 10.0};
  SceneOptions approx;
  approx.with_relays = true;
  approx.relay_mode = RelayMode::approximate_uniform;
  SceneOptions exact = approx;
  exact.relay_mode = RelayMode::exact_vehicle;

  int approx_cover = 0;
  int exact_cover = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const RandomSeed seed = seed_of(i, 19);
    const Scene a = build_scene(p, approx, seed);
    const Scene e = build_scene(p, exact, seed);  // shared line/rsu/extent draws
    approx_cover += origin_covered(a.rsu_segments, p.eta) ||
                    origin_covered(a.relay_segments, p.eta);
    exact_cover += origin_covered(e.rsu_segments, p.eta) ||
                   origin_covered(e.relay_segments, p.eta);
  }
  const double diff =
      std::fabs(approx_cover - exact_cover) / static_cast<double>(n);
  CHECK(diff < 0.01);
}

TEST_CASE("ndjson export round-trips and carries metadata") {
  ScenarioParams p = kUrban;
  SceneOptions opt;
  opt.region = SimRegion::disk;
  opt.disk_radius = 500.0;
  opt.with_vehicles = true;
  opt.with_relays = true;
  const Scene scene = build_scene(p, opt, RandomSeed{99, 1});

  std::ostringstream out;
  export_scene(scene, SceneFormat::ndjson, out);
  const std::string text = out.str();

  std::istringstream in(text);
  std::string line;
  std::size_t lines_seen = 0, rsus_seen = 0, vehicles_seen = 0, relays_seen = 0,
              segments_seen = 0, rects_seen = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    const auto rec = nlohmann::json::parse(line);  // every record is valid JSON
    const std::string kind = rec.at("kind");
    if (kind == "header") {
      header_seen = true;
      CHECK(rec.at("params").at("lambda_l").get<double>() == doctest::Approx(5e-3));
      CHECK(rec.at("params").at("mu").get<double>() == doctest::Approx(2e-3));
      CHECK(rec.at("params").at("mu_v").get<double>() == doctest::Approx(25e-3));
      CHECK(rec.at("seed").at("value").get<std::uint64_t>() == 99);
      CHECK(rec.at("seed").at("stream").get<std::uint64_t>() == 1);
    } else if (kind == "line") {
      const std::size_t idx = rec.at("index");
      CHECK(rec.at("offset").get<double>() ==
            doctest::Approx(scene.lines[idx].offset()).epsilon(1e-9));
      CHECK(rec.at("angle").get<double>() ==
            doctest::Approx(scene.lines[idx].angle()).epsilon(1e-9));
      ++lines_seen;
    } else if (kind == "rsu") {
      ++rsus_seen;
    } else if (kind == "vehicle") {
      ++vehicles_seen;
    } else if (kind == "relay") {
      ++relays_seen;
    } else if (kind == "segment") {
      const std::size_t idx = rec.at("index");
      const auto& segs =
          rec.at("role") == "rsu" ? scene.rsu_segments : scene.relay_segments;
      CHECK(rec.at("anchor").get<double>() ==
            doctest::Approx(segs[idx].anchor).epsilon(1e-9));
      CHECK(rec.at("lo").get<double>() == doctest::Approx(segs[idx].lo()).epsilon(1e-9));
      CHECK(rec.at("hi").get<double>() == doctest::Approx(segs[idx].hi()).epsilon(1e-9));
      ++segments_seen;
    } else if (kind == "rect") {
      CHECK(rec.at("xs").size() == 4);
      CHECK(rec.at("ys").size() == 4);
      ++rects_seen;
    }
  }
  CHECK(header_seen);
  CHECK(lines_seen == scene.lines.size());
  std::size_t total_rsus = 0, total_vehicles = 0;
  for (const auto& r : scene.rsus) total_rsus += r.size();
  for (const auto& v : scene.vehicles) total_vehicles += v.size();
  CHECK(rsus_seen == total_rsus);
  CHECK(vehicles_seen == total_vehicles);
  CHECK(relays_seen == scene.relay_anchors.size());
  CHECK(segments_seen == scene.rsu_segments.size() + scene.relay_segments.size());
  CHECK(rects_seen == segments_seen);

  // byte-determinism of the export
  std::ostringstream out2;
  export_scene(build_scene(p, opt, RandomSeed{99, 1}), SceneFormat::ndjson, out2);
  CHECK(out2.str() == text);
}

TEST_CASE("empty scene exports a valid document") {
  ScenarioParams p = kUrban;
  p.lambda_l = 0.0;
  const Scene scene = build_scene(p, SceneOptions{}, seed_of(5));

  std::ostringstream nd;
  export_scene(scene, SceneFormat::ndjson, nd);
  std::istringstream in(nd.str());
  std::string line;
  int records = 0;
  while (std::getline(in, line)) {
    bool parses = true;
    try {
      [[maybe_unused]] const auto rec = nlohmann::json::parse(line);
    } catch (...) {
      parses = false;
    }
    CHECK(parses);
    ++records;
  }
  CHECK(records == 1);  // header only

  std::ostringstream csv;
  export_scene(scene, SceneFormat::csv, csv);
  CHECK(csv.str().find("kind,role,line") != std::string::npos);
  CHECK(csv.str().find("lambda_l=0") != std::string::npos);
}

TEST_CASE("csv export row shape") {
  SceneOptions opt;
  opt.region = SimRegion::disk;
  opt.disk_radius = 400.0;
  opt.with_vehicles = true;
  opt.with_relays = true;
  const Scene scene = build_scene(kUrban, opt, RandomSeed{123, 0});

  std::ostringstream out;
  export_scene(scene, SceneFormat::csv, out);
  std::istringstream in(out.str());
  std::string line;
  std::size_t comment = 0, rows = 0;
  std::size_t columns = 0;
  while (std::getline(in, line)) {
    if (line.starts_with("#")) {
      ++comment;
      continue;
    }
    const std::size_t commas = static_cast<std::size_t>(
        std::count(line.begin(), line.end(), ','));
    if (rows == 0) columns = commas;
    CHECK(commas == columns);  // flat table: same arity everywhere
    ++rows;
  }
  CHECK(comment == 2);
  std::size_t total_rsus = 0, total_vehicles = 0;
  for (const auto& r : scene.rsus) total_rsus += r.size();
  for (const auto& v : scene.vehicles) total_vehicles += v.size();
  const std::size_t expected = 1 /*header row*/ + scene.lines.size() + total_rsus +
                               total_vehicles + scene.relay_anchors.size() +
                               scene.rsu_segments.size() + scene.relay_segments.size();
  CHECK(rows == expected);
}
