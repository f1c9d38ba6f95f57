#include <ostream>
#include <string>

#include "loscov/coverage.hpp"
#include "loscov/numfmt.hpp"
#include "loscov/version.hpp"

namespace loscov {

namespace {

const char* region_name(SimRegion r) {
  return r == SimRegion::disk ? "disk" : "window";
}

const char* relay_mode_name(RelayMode m) {
  return m == RelayMode::approximate_uniform ? "approx" : "exact";
}

std::string json_pair(const char* key, double v) {
  return std::string("\"") + key + "\":" + fmt_double(v);
}

void write_params_json(std::ostream& out, const ScenarioParams& p) {
  out << "{" << json_pair("lambda_l", p.lambda_l) << "," << json_pair("mu", p.mu)
      << "," << json_pair("mu_v", p.mu_v) << "," << json_pair("gamma", p.gamma)
      << "," << json_pair("eta", p.eta) << "," << json_pair("speed", p.speed)
      << "}";
}

void write_point_json(std::ostream& out, const char* kind, std::size_t line,
                      const LineFrame& frame, double s) {
  const Vec2 p = frame.to_plane(s);
  out << "{\"kind\":\"" << kind << "\",\"line\":" << line
      << "," << json_pair("s", s) << "," << json_pair("x", p.x) << ","
      << json_pair("y", p.y) << "}\n";
}

void write_segment_json(std::ostream& out, const char* role, std::size_t index,
                        const LosSegment& seg) {
  const LineFrame frame{seg.line};
  const Vec2 a = frame.to_plane(seg.lo());
  const Vec2 b = frame.to_plane(seg.hi());
  out << "{\"kind\":\"segment\",\"role\":\"" << role << "\",\"line\":" << seg.line_index
      << ",\"index\":" << index << "," << json_pair("anchor", seg.anchor) << ","
      << json_pair("left", seg.left_extent) << "," << json_pair("right", seg.right_extent)
      << "," << json_pair("lo", seg.lo()) << "," << json_pair("hi", seg.hi()) << ","
      << json_pair("x0", a.x) << "," << json_pair("y0", a.y) << ","
      << json_pair("x1", b.x) << "," << json_pair("y1", b.y) << "}\n";
}

void write_rect_json(std::ostream& out, const char* role, std::size_t index,
                     const LosSegment& seg, double eta) {
  const LineFrame frame{seg.line};
  const Vec2 n = frame.normal();
  const double h = eta / 2.0;
  const Vec2 a = frame.to_plane(seg.lo());
  const Vec2 b = frame.to_plane(seg.hi());
  out << "{\"kind\":\"rect\",\"role\":\"" << role << "\",\"line\":" << seg.line_index
      << ",\"index\":" << index << "," << json_pair("half_width", h) << ",\"xs\":["
      << fmt_double(a.x - h * n.x) << "," << fmt_double(b.x - h * n.x) << ","
      << fmt_double(b.x + h * n.x) << "," << fmt_double(a.x + h * n.x) << "],\"ys\":["
      << fmt_double(a.y - h * n.y) << "," << fmt_double(b.y - h * n.y) << ","
      << fmt_double(b.y + h * n.y) << "," << fmt_double(a.y + h * n.y) << "]}\n";
}

void export_ndjson(const Scene& scene, std::ostream& out) {
  out << "{\"kind\":\"header\",\"tool\":\"loscov\",\"version\":\"" << kVersion
      << "\",\"seed\":{\"value\":" << fmt_u64(scene.seed.value)
      << ",\"stream\":" << fmt_u64(scene.seed.stream) << "},\"region\":\""
      << region_name(scene.region) << "\","
      << json_pair("region_radius", scene.region_radius) << ",\"relay_mode\":\""
      << relay_mode_name(scene.relay_mode) << "\",\"params\":";
  write_params_json(out, scene.params);
  out << "}\n";

  for (std::size_t i = 0; i < scene.lines.size(); ++i) {
    const Line& l = scene.lines[i];
    out << "{\"kind\":\"line\",\"index\":" << i << ","
        << json_pair("offset", l.offset()) << "," << json_pair("angle", l.angle())
        << "}\n";
  }
  for (std::size_t i = 0; i < scene.lines.size(); ++i) {
    const LineFrame frame{scene.lines[i]};
    for (double s : scene.rsus[i]) write_point_json(out, "rsu", i, frame, s);
    for (double s : scene.vehicles[i]) write_point_json(out, "vehicle", i, frame, s);
  }
  for (const RelayAnchor& a : scene.relay_anchors) {
    const LineFrame frame{scene.lines[a.line_index]};
    const Vec2 p = frame.to_plane(a.s);
    out << "{\"kind\":\"relay\",\"line\":" << a.line_index << ",\"parent\":" << a.parent
        << "," << json_pair("s", a.s) << "," << json_pair("x", p.x) << ","
        << json_pair("y", p.y) << "}\n";
  }
  for (std::size_t i = 0; i < scene.rsu_segments.size(); ++i) {
    write_segment_json(out, "rsu", i, scene.rsu_segments[i]);
    write_rect_json(out, "rsu", i, scene.rsu_segments[i], scene.params.eta);
  }
  for (std::size_t i = 0; i < scene.relay_segments.size(); ++i) {
    write_segment_json(out, "relay", i, scene.relay_segments[i]);
    write_rect_json(out, "relay", i, scene.relay_segments[i], scene.params.eta);
  }
}

void csv_cell(std::ostream& out, double v) { out << fmt_double(v); }

void export_csv(const Scene& scene, std::ostream& out) {
  const ScenarioParams& p = scene.params;
  out << "# tool=loscov version=" << kVersion << " seed=" << fmt_u64(scene.seed.value)
      << " stream=" << fmt_u64(scene.seed.stream) << " region=" << region_name(scene.region)
      << " region_radius=" << fmt_double(scene.region_radius)
      << " relay_mode=" << relay_mode_name(scene.relay_mode) << "\n";
  out << "# lambda_l=" << fmt_double(p.lambda_l) << " mu=" << fmt_double(p.mu)
      << " mu_v=" << fmt_double(p.mu_v) << " gamma=" << fmt_double(p.gamma)
      << " eta=" << fmt_double(p.eta) << " speed=" << fmt_double(p.speed) << "\n";
  out << "kind,role,line,index,parent,offset,angle,s,left,right,lo,hi,x,y\n";

  for (std::size_t i = 0; i < scene.lines.size(); ++i) {
    out << "line,,," << i << ",,";
    csv_cell(out, scene.lines[i].offset());
    out << ",";
    csv_cell(out, scene.lines[i].angle());
    out << ",,,,,,,\n";
  }
  auto point_row = [&](const char* kind, std::size_t line, double s) {
    const Vec2 pt = LineFrame{scene.lines[line]}.to_plane(s);
    out << kind << ",," << line << ",,,,,";
    csv_cell(out, s);
    out << ",,,,,";
    csv_cell(out, pt.x);
    out << ",";
    csv_cell(out, pt.y);
    out << "\n";
  };
  for (std::size_t i = 0; i < scene.lines.size(); ++i) {
    for (double s : scene.rsus[i]) point_row("rsu", i, s);
    for (double s : scene.vehicles[i]) point_row("vehicle", i, s);
  }
  for (const RelayAnchor& a : scene.relay_anchors) {
    const Vec2 pt = LineFrame{scene.lines[a.line_index]}.to_plane(a.s);
    out << "relay,," << a.line_index << ",," << a.parent << ",,,";
    csv_cell(out, a.s);
    out << ",,,,,";
    csv_cell(out, pt.x);
    out << ",";
    csv_cell(out, pt.y);
    out << "\n";
  }
  auto segment_row = [&](const char* role, std::size_t index, const LosSegment& seg) {
    out << "segment," << role << "," << seg.line_index << "," << index << ",,,,";
    csv_cell(out, seg.anchor);
    out << ",";
    csv_cell(out, seg.left_extent);
    out << ",";
    csv_cell(out, seg.right_extent);
    out << ",";
    csv_cell(out, seg.lo());
    out << ",";
    csv_cell(out, seg.hi());
    out << ",,\n";
  };
  for (std::size_t i = 0; i < scene.rsu_segments.size(); ++i)
    segment_row("rsu", i, scene.rsu_segments[i]);
  for (std::size_t i = 0; i < scene.relay_segments.size(); ++i)
    segment_row("relay", i, scene.relay_segments[i]);
}

}  // namespace

void export_scene(const Scene& scene, SceneFormat format, std::ostream& out) {
  if (format == SceneFormat::ndjson) {
    export_ndjson(scene, out);
  } else {
    export_csv(scene, out);
  }
}

}  // namespace loscov
