#include <cmath>
#include <limits>
#include <map>

#include "loscov/montecarlo.hpp"

namespace loscov {

namespace {

ScenarioParams with_axis_value(ScenarioParams p, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::lambda_l: p.lambda_l = value; break;
    case SweepAxis::mu: p.mu = value; break;
    case SweepAxis::mu_v: p.mu_v = value; break;
    case SweepAxis::gamma: p.gamma = value; break;
    case SweepAxis::eta: p.eta = value; break;
  }
  return p;
}

}  // namespace

std::string axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::lambda_l: return "lambda_l";
    case SweepAxis::mu: return "mu";
    case SweepAxis::mu_v: return "mu_v";
    case SweepAxis::gamma: return "gamma";
    case SweepAxis::eta: return "eta";
  }
  return "axis";
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<SweepRow> rows;
  rows.reserve(spec.values.size());

  // The relay integral depends only on gamma; reuse it across rows.
  std::map<double, std::pair<double, double>> integral_cache;
  auto integral_for = [&](double gamma) {
    auto it = integral_cache.find(gamma);
    if (it != integral_cache.end()) return it->second;
    QuadratureSettings q = spec.quad;
    const double value = pair_reach_integral(gamma, q);
    const double err_scale = std::max(q.abs_tol, q.rel_tol * value);
    auto entry = std::make_pair(value, err_scale);
    integral_cache.emplace(gamma, entry);
    return entry;
  };

  for (std::size_t r = 0; r < spec.values.size(); ++r) {
    SweepRow row;
    row.axis_value = spec.values[r];
    const ScenarioParams p = with_axis_value(spec.base, spec.axis, spec.values[r]);

    row.mc = paired_gain_estimate(p, spec.mc, spec.n_scenes,
                                  spec.seed.substream(r));

    row.thm1 = rsu_area_fraction(p.lambda_l, p.mu, p.gamma, p.eta).value;
    row.additive = additive_rsu_fraction(p.lambda_l, p.mu, p.gamma, p.eta);
    row.gamma_err = additive_error(p.lambda_l, p.mu, p.gamma, p.eta,
                                   AdditiveErrorVariant::consistent);
    try {
      const auto [integral, ierr] = integral_for(p.gamma);
      const AreaFraction t2 = rsu_relay_area_fraction_given_integral(
          p.lambda_l, p.mu, p.eta, integral, ierr);
      row.thm2 = t2.value;
      row.thm2_error_bound = t2.error_bound;
      row.ratio = row.thm1 > 0.0 ? row.thm2 / row.thm1 : nan;
    } catch (const QuadratureError&) {
      row.quad_ok = false;
      row.thm2 = nan;
      row.ratio = nan;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace loscov
