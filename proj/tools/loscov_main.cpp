#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "loscov/analytic.hpp"
#include "loscov/coverage.hpp"
#include "loscov/montecarlo.hpp"
#include "loscov/numfmt.hpp"
#include "loscov/version.hpp"
#include "presets.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace loscov;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct RunConfig {
  std::string preset;
  // user units: intensities per km, lengths in meters
  double lambda_l_km = 5.0;
  double mu_km = 2.0;
  double mu_v_km = 25.0;
  double gamma = 100.0;
  double eta = 100.0;
  double speed = 10.0;

  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::uint64_t n_scenes = 100000;
  std::string relay_mode = "approx";
  std::string region = "window";
  unsigned threads = 0;
  std::string out;
  std::string format;

  QuadratureSettings quad;

  // subcommand-specific
  std::string mode = "paired";        // simulate
  std::string axis;                   // sweep
  std::vector<double> values;         // sweep, user units
  double scene_radius = 1000.0;       // scene
  bool manhattan = false;             // scene
  bool no_vehicles = false;           // scene

  ScenarioParams params() const {
    return {lambda_l_km / 1000.0, mu_km / 1000.0, mu_v_km / 1000.0,
            gamma, eta, speed};
  }
  RandomSeed random_seed() const { return RandomSeed{seed, stream}; }
  RelayMode relay() const {
    return relay_mode == "exact" ? RelayMode::exact_vehicle
                                 : RelayMode::approximate_uniform;
  }
  SimRegion sim_region() const {
    return region == "disk" ? SimRegion::disk : SimRegion::origin_window;
  }
  McSettings mc() const {
    McSettings s;
    s.region = sim_region();
    s.relay_mode = relay();
    s.threads = threads;
    return s;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void validate_params(const RunConfig& cfg) {
  const auto check = [](double v, const char* field) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw UsageError(std::string("invalid value for ") + field +
                       ": must be a finite nonnegative number");
  };
  check(cfg.lambda_l_km, "--lambda-l");
  check(cfg.mu_km, "--mu");
  check(cfg.mu_v_km, "--mu-v");
  check(cfg.gamma, "--gamma");
  check(cfg.eta, "--eta");
  check(cfg.speed, "--speed");
  if (cfg.quad.rel_tol <= 0.0 || cfg.quad.abs_tol <= 0.0)
    throw UsageError("invalid quadrature tolerance: must be positive");
  if (cfg.quad.x_cutoff_multiplier <= 0.0)
    throw UsageError("invalid value for --quad-cutoff: must be positive");
  if (cfg.quad.max_subdivisions < 1)
    throw UsageError("invalid value for --quad-max-subdiv: must be >= 1");
}

json params_json(const ScenarioParams& p) {
  return json{{"lambda_l", p.lambda_l}, {"mu", p.mu},     {"mu_v", p.mu_v},
              {"gamma", p.gamma},       {"eta", p.eta},   {"speed", p.speed}};
}

json seed_json(RandomSeed s) {
  return json{{"value", s.value}, {"stream", s.stream}};
}

json provenance(const RunConfig& cfg, const char* command) {
  return json{{"tool", "loscov"},
              {"version", std::string(kVersion)},
              {"command", command},
              {"params", params_json(cfg.params())},
              {"seed", seed_json(cfg.random_seed())}};
}

std::string provenance_csv(const RunConfig& cfg, const char* command) {
  const ScenarioParams p = cfg.params();
  std::ostringstream out;
  out << "# tool=loscov version=" << kVersion << " command=" << command
      << " seed=" << fmt_u64(cfg.seed) << " stream=" << fmt_u64(cfg.stream) << "\n"
      << "# lambda_l=" << fmt_double(p.lambda_l) << " mu=" << fmt_double(p.mu)
      << " mu_v=" << fmt_double(p.mu_v) << " gamma=" << fmt_double(p.gamma)
      << " eta=" << fmt_double(p.eta) << " speed=" << fmt_double(p.speed) << "\n";
  return out.str();
}

std::string csv_num(double v) {
  return std::isnan(v) ? std::string("nan") : fmt_double(v);
}

void write_output(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + cfg.out);
  file << text;
}

std::string format_or(const RunConfig& cfg, const char* fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

// ---------------------------------------------------------------- eval ----

int cmd_eval(const RunConfig& cfg) {
  const ScenarioParams p = cfg.params();
  const AreaFraction t1 = rsu_area_fraction(p.lambda_l, p.mu, p.gamma, p.eta);
  const AreaFraction t2 =
      rsu_relay_area_fraction(p.lambda_l, p.mu, p.gamma, p.eta, cfg.quad);
  const AreaFraction rf = road_area_fraction(p.lambda_l, p.eta);
  const double additive = additive_rsu_fraction(p.lambda_l, p.mu, p.gamma, p.eta);
  const double linear = linear_los_fraction(p.mu, p.gamma);
  const double err_c = additive_error(p.lambda_l, p.mu, p.gamma, p.eta,
                                      AdditiveErrorVariant::consistent);
  const double err_d = additive_error(p.lambda_l, p.mu, p.gamma, p.eta,
                                      AdditiveErrorVariant::doubled_exponent);
  const std::optional<double> ratio =
      t1.value > 0.0 ? std::optional<double>(t2.value / t1.value) : std::nullopt;

  const std::string fmt = format_or(cfg, "json");
  if (fmt == "json" || fmt == "ndjson") {
    json doc = provenance(cfg, "eval");
    doc["settings"] = json{{"quad_rel_tol", cfg.quad.rel_tol},
                           {"quad_abs_tol", cfg.quad.abs_tol},
                           {"quad_cutoff", cfg.quad.x_cutoff_multiplier},
                           {"quad_max_subdiv", cfg.quad.max_subdivisions}};
    doc["results"] = json{{"thm1", t1.value},
                          {"thm2", t2.value},
                          {"thm2_error_bound", t2.error_bound},
                          {"road_fraction", rf.value},
                          {"additive", additive},
                          {"linear_fraction", linear},
                          {"gamma_err", err_c},
                          {"gamma_err_doubled", err_d},
                          {"ratio", ratio ? json(*ratio) : json(nullptr)},
                          {"ratio_defined", ratio.has_value()}};
    write_output(cfg, doc.dump(fmt == "json" ? 2 : -1) + "\n");
  } else if (fmt == "csv") {
    std::ostringstream out;
    out << provenance_csv(cfg, "eval")
        << "thm1,thm2,thm2_error_bound,road_fraction,additive,linear_fraction,"
           "gamma_err,gamma_err_doubled,ratio\n"
        << csv_num(t1.value) << "," << csv_num(t2.value) << ","
        << csv_num(t2.error_bound) << "," << csv_num(rf.value) << ","
        << csv_num(additive) << "," << csv_num(linear) << "," << csv_num(err_c)
        << "," << csv_num(err_d) << ","
        << (ratio ? csv_num(*ratio) : std::string("nan")) << "\n";
    write_output(cfg, out.str());
  } else {
    throw UsageError("unsupported format for eval: " + fmt);
  }
  return kExitOk;
}

// ------------------------------------------------------------ simulate ----

int cmd_simulate(const RunConfig& cfg) {
  if (cfg.n_scenes < 1) throw UsageError("invalid value for --n-scenes: must be >= 1");
  const ScenarioParams p = cfg.params();
  const McSettings mc = cfg.mc();

  json results;
  std::vector<std::pair<std::string, double>> columns;
  if (cfg.mode == "rsu" || cfg.mode == "relay") {
    const CoverageMode m = cfg.mode == "rsu" ? CoverageMode::rsu_only
                                             : CoverageMode::rsu_plus_relay;
    const CoverageEstimate est =
        estimate_area_fraction(p, m, mc, cfg.n_scenes, cfg.random_seed());
    const std::string key = cfg.mode == "rsu" ? "mc_rsu" : "mc_rsu_relay";
    results[key] = est.mean;
    results[key + "_se"] = est.std_error;
    columns = {{key, est.mean}, {key + "_se", est.std_error}};
  } else if (cfg.mode == "paired") {
    const PairedGainEstimate pg =
        paired_gain_estimate(p, mc, cfg.n_scenes, cfg.random_seed());
    results = json{{"mc_rsu", pg.rsu.mean},
                   {"mc_rsu_se", pg.rsu.std_error},
                   {"mc_rsu_relay", pg.rsu_relay.mean},
                   {"mc_rsu_relay_se", pg.rsu_relay.std_error},
                   {"ratio", pg.ratio ? json(*pg.ratio) : json(nullptr)},
                   {"ratio_se", pg.ratio_std_error},
                   {"ratio_defined", pg.ratio.has_value()}};
    columns = {{"mc_rsu", pg.rsu.mean},
               {"mc_rsu_se", pg.rsu.std_error},
               {"mc_rsu_relay", pg.rsu_relay.mean},
               {"mc_rsu_relay_se", pg.rsu_relay.std_error},
               {"ratio", pg.ratio.value_or(std::nan(""))},
               {"ratio_se", pg.ratio_std_error}};
  } else {
    throw UsageError("invalid value for --mode: expected rsu, relay or paired");
  }

  const std::string fmt = format_or(cfg, "json");
  if (fmt == "json" || fmt == "ndjson") {
    json doc = provenance(cfg, "simulate");
    doc["settings"] = json{{"n_scenes", cfg.n_scenes},
                           {"mode", cfg.mode},
                           {"relay_mode", cfg.relay_mode},
                           {"region", cfg.region}};
    doc["results"] = results;
    write_output(cfg, doc.dump(fmt == "json" ? 2 : -1) + "\n");
  } else if (fmt == "csv") {
    std::ostringstream out;
    out << provenance_csv(cfg, "simulate") << "# n_scenes=" << fmt_u64(cfg.n_scenes)
        << " mode=" << cfg.mode << " relay_mode=" << cfg.relay_mode
        << " region=" << cfg.region << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
      out << columns[i].first << (i + 1 < columns.size() ? "," : "\n");
    for (std::size_t i = 0; i < columns.size(); ++i)
      out << csv_num(columns[i].second) << (i + 1 < columns.size() ? "," : "\n");
    write_output(cfg, out.str());
  } else {
    throw UsageError("unsupported format for simulate: " + fmt);
  }
  return kExitOk;
}

// --------------------------------------------------------------- sweep ----

SweepAxis parse_axis(const std::string& name) {
  if (name == "lambda-l" || name == "lambda_l") return SweepAxis::lambda_l;
  if (name == "mu") return SweepAxis::mu;
  if (name == "mu-v" || name == "mu_v") return SweepAxis::mu_v;
  if (name == "gamma") return SweepAxis::gamma;
  if (name == "eta") return SweepAxis::eta;
  throw UsageError("invalid value for --axis: expected lambda-l, mu, mu-v, gamma or eta");
}

bool axis_is_intensity(SweepAxis axis) {
  return axis == SweepAxis::lambda_l || axis == SweepAxis::mu ||
         axis == SweepAxis::mu_v;
}

int cmd_sweep(const RunConfig& cfg) {
  if (cfg.axis.empty()) throw UsageError("missing --axis for sweep");
  if (cfg.values.empty()) throw UsageError("missing --values for sweep: need at least one value");
  if (cfg.n_scenes < 1) throw UsageError("invalid value for --n-scenes: must be >= 1");

  SweepSpec spec;
  spec.base = cfg.params();
  spec.axis = parse_axis(cfg.axis);
  spec.values = cfg.values;
  if (axis_is_intensity(spec.axis))
    for (double& v : spec.values) v /= 1000.0;  // per km on the CLI
  for (double v : spec.values)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw UsageError("invalid sweep value: must be finite and nonnegative");
  spec.n_scenes = cfg.n_scenes;
  spec.seed = cfg.random_seed();
  spec.mc = cfg.mc();
  spec.quad = cfg.quad;

  const std::vector<SweepRow> rows = run_sweep(spec);
  const std::string axis = axis_name(spec.axis);

  const auto row_json = [&](const SweepRow& r) {
    return json{{axis, r.axis_value},
                {"mc_rsu", r.mc.rsu.mean},
                {"mc_rsu_relay", r.mc.rsu_relay.mean},
                {"thm1", r.thm1},
                {"thm2", std::isnan(r.thm2) ? json(nullptr) : json(r.thm2)},
                {"additive", r.additive},
                {"gamma_err", r.gamma_err},
                {"ratio", std::isnan(r.ratio) ? json(nullptr) : json(r.ratio)},
                {"mc_rsu_se", r.mc.rsu.std_error},
                {"mc_rsu_relay_se", r.mc.rsu_relay.std_error},
                {"mc_ratio", r.mc.ratio ? json(*r.mc.ratio) : json(nullptr)},
                {"mc_ratio_se", r.mc.ratio_std_error},
                {"thm2_error_bound", r.thm2_error_bound},
                {"quad_ok", r.quad_ok}};
  };

  const std::string fmt = format_or(cfg, "csv");
  if (fmt == "csv") {
    std::ostringstream out;
    out << provenance_csv(cfg, "sweep") << "# n_scenes=" << fmt_u64(cfg.n_scenes)
        << " relay_mode=" << cfg.relay_mode << " region=" << cfg.region
        << " axis=" << axis << "\n";
    out << axis
        << ",mc_rsu,mc_rsu_relay,thm1,thm2,additive,gamma_err,ratio,"
           "mc_rsu_se,mc_rsu_relay_se,mc_ratio,mc_ratio_se,thm2_error_bound,quad_ok\n";
    for (const SweepRow& r : rows) {
      out << csv_num(r.axis_value) << "," << csv_num(r.mc.rsu.mean) << ","
          << csv_num(r.mc.rsu_relay.mean) << "," << csv_num(r.thm1) << ","
          << csv_num(r.thm2) << "," << csv_num(r.additive) << ","
          << csv_num(r.gamma_err) << "," << csv_num(r.ratio) << ","
          << csv_num(r.mc.rsu.std_error) << "," << csv_num(r.mc.rsu_relay.std_error)
          << "," << csv_num(r.mc.ratio.value_or(std::nan(""))) << ","
          << csv_num(r.mc.ratio_std_error) << "," << csv_num(r.thm2_error_bound)
          << "," << (r.quad_ok ? 1 : 0) << "\n";
    }
    write_output(cfg, out.str());
  } else if (fmt == "json") {
    json doc = provenance(cfg, "sweep");
    doc["settings"] = json{{"n_scenes", cfg.n_scenes},
                           {"relay_mode", cfg.relay_mode},
                           {"region", cfg.region},
                           {"axis", axis}};
    json arr = json::array();
    for (const SweepRow& r : rows) arr.push_back(row_json(r));
    doc["rows"] = arr;
    write_output(cfg, doc.dump(2) + "\n");
  } else if (fmt == "ndjson") {
    std::ostringstream out;
    json head = provenance(cfg, "sweep");
    head["kind"] = "header";
    out << head.dump(-1) << "\n";
    for (const SweepRow& r : rows) {
      json jr = row_json(r);
      jr["kind"] = "row";
      out << jr.dump(-1) << "\n";
    }
    write_output(cfg, out.str());
  } else {
    throw UsageError("unsupported format for sweep: " + fmt);
  }

  const bool all_quad_ok =
      std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.quad_ok; });
  if (!all_quad_ok)
    std::cerr << "loscov: warning: quadrature failed on some rows (quad_ok=0)\n";
  return kExitOk;
}

// --------------------------------------------------------------- scene ----

int cmd_scene(const RunConfig& cfg) {
  if (!(cfg.scene_radius > 0.0))
    throw UsageError("invalid value for --radius: must be positive");

  SceneOptions opt;
  opt.region = SimRegion::disk;
  opt.disk_radius = cfg.scene_radius;
  opt.manhattan = cfg.manhattan;
  opt.with_vehicles = !cfg.no_vehicles;
  opt.with_relays = true;
  opt.relay_mode = cfg.relay();

  const Scene scene = build_scene(cfg.params(), opt, cfg.random_seed());

  const std::string fmt = format_or(cfg, "ndjson");
  SceneFormat format;
  if (fmt == "ndjson") {
    format = SceneFormat::ndjson;
  } else if (fmt == "csv") {
    format = SceneFormat::csv;
  } else {
    throw UsageError("unsupported format for scene export: " + fmt);
  }

  std::ostringstream out;
  export_scene(scene, format, out);
  write_output(cfg, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"LOS coverage area fractions for vehicular networks on random road layouts"};
  app.set_config("--config", "", "Flat key=value config file; command-line flags win");

  app.add_option("--preset", cfg.preset,
                 "Scenario preset: 3gpp-urban-a, 3gpp-urban-b, dense-urban");
  auto* o_lambda = app.add_option("--lambda-l", cfg.lambda_l_km, "Road line intensity per km");
  auto* o_mu = app.add_option("--mu", cfg.mu_km, "RSU intensity per km of road");
  auto* o_muv = app.add_option("--mu-v", cfg.mu_v_km, "Vehicle intensity per km of road");
  auto* o_gamma = app.add_option("--gamma", cfg.gamma, "Mean LOS distance in meters");
  auto* o_eta = app.add_option("--eta", cfg.eta, "Road width in meters");
  auto* o_speed = app.add_option("--speed", cfg.speed, "Vehicle speed in m/s (metadata)");
  app.add_option("--seed", cfg.seed, "Random seed value");
  app.add_option("--stream", cfg.stream, "Random stream index");
  app.add_option("--n-scenes", cfg.n_scenes, "Monte Carlo scene count");
  app.add_option("--relay-mode", cfg.relay_mode, "Relay selection: approx or exact")
      ->check(CLI::IsMember({"approx", "exact"}));
  app.add_option("--region", cfg.region, "Simulation region: disk or window")
      ->check(CLI::IsMember({"disk", "window"}));
  app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)")
      ->envname("LOSCOV_THREADS");
  app.add_option("--out", cfg.out, "Output path (default stdout)");
  app.add_option("--format", cfg.format, "Output format: json, csv or ndjson");
  app.add_option("--quad-rel-tol", cfg.quad.rel_tol, "Quadrature relative tolerance");
  app.add_option("--quad-abs-tol", cfg.quad.abs_tol, "Quadrature absolute tolerance");
  app.add_option("--quad-cutoff", cfg.quad.x_cutoff_multiplier,
                 "Quadrature cutoff in multiples of gamma");
  app.add_option("--quad-max-subdiv", cfg.quad.max_subdivisions,
                 "Quadrature subdivision budget");

  CLI::App* eval = app.add_subcommand("eval", "Closed-form and quadrature area fractions");
  CLI::App* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo estimation");
  simulate->add_option("--mode", cfg.mode, "Estimate: rsu, relay or paired");
  CLI::App* sweep = app.add_subcommand("sweep", "Parameter sweep (CSV table)");
  sweep->add_option("--axis", cfg.axis, "Sweep axis: lambda-l, mu, mu-v, gamma, eta");
  sweep->add_option("--values", cfg.values, "Comma-separated axis values")
      ->delimiter(',');
  CLI::App* scene = app.add_subcommand("scene", "Sample one scene and export it");
  scene->add_option("--radius", cfg.scene_radius, "Scene disk radius in meters");
  scene->add_flag("--manhattan", cfg.manhattan, "Axis-aligned road angles (0 or pi/2)");
  scene->add_flag("--no-vehicles", cfg.no_vehicles, "Skip vehicle sampling");

  for (CLI::App* sub : {eval, simulate, sweep, scene}) sub->fallthrough();
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!cfg.preset.empty()) {
      const auto preset = loscov::cli::find_preset(cfg.preset);
      if (!preset) throw UsageError("unknown preset: " + cfg.preset);
      ScenarioParams p = *preset;
      // explicit flags win over the preset
      if (!*o_lambda) cfg.lambda_l_km = p.lambda_l * 1000.0;
      if (!*o_mu) cfg.mu_km = p.mu * 1000.0;
      if (!*o_muv) cfg.mu_v_km = p.mu_v * 1000.0;
      if (!*o_gamma) cfg.gamma = p.gamma;
      if (!*o_eta) cfg.eta = p.eta;
      if (!*o_speed) cfg.speed = p.speed;
    }
    validate_params(cfg);

    if (eval->parsed()) return cmd_eval(cfg);
    if (simulate->parsed()) return cmd_simulate(cfg);
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (scene->parsed()) return cmd_scene(cfg);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "loscov: error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const QuadratureError& e) {
    std::cerr << "loscov: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "loscov: error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
