#include "loscov/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace loscov {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr double kKronrodNodes[8] = {
    0.000000000000000000000000000000000e+00,
    2.077849550078984676006894037732449e-01,
    4.058451513773971669066064120769615e-01,
    5.860872354676911302941448382587296e-01,
    7.415311855993944398638647732807884e-01,
    8.648644233597690727897127886409262e-01,
    9.491079123427585245261896840478513e-01,
    9.914553711208126392068546975263285e-01,
};
constexpr double kKronrodWeights[8] = {
    2.094821410847278280129991748917143e-01,
    2.044329400752988924141619992346491e-01,
    1.903505780647854099132564024210137e-01,
    1.690047266392679028265834265985503e-01,
    1.406532597155259187451895905102379e-01,
    1.047900103222501838398763225415180e-01,
    6.309209262997855329070066318920429e-02,
    2.293532201052922496373200805896959e-02,
};
constexpr double kGaussWeights[4] = {
    4.179591836734693877551020408163265e-01,
    3.818300505051189449503697754889751e-01,
    2.797053914892766679014677714237796e-01,
    1.294849661688696932706114326790820e-01,
};

struct PanelResult {
  double value = 0.0;
  double error = 0.0;
};

template <class F>
PanelResult gk15(const F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(center);
  double kronrod = kKronrodWeights[0] * f0;
  double gauss = kGaussWeights[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * fsum;
    if (i % 2 == 0) gauss += kGaussWeights[i / 2] * fsum;
  }
  kronrod *= half;
  gauss *= half;
  const double diff = std::fabs(kronrod - gauss);
  // QUADPACK-style sharpened error estimate.
  const double err = diff > 0.0 ? diff * std::min(1.0, std::pow(200.0 * diff, 1.5))
                                : 0.0;
  return {kronrod, std::max(err, diff * 1e-3)};
}

struct QuadOutcome {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

// Globally adaptive: repeatedly bisect the panel with the largest error
// estimate. Deterministic: panel order depends only on the integrand.
template <class F>
QuadOutcome adaptive_gk(const F& f, double a, double b, double rel_tol,
                        double abs_tol, int max_subdivisions) {
  struct Panel {
    double a, b, value, error;
  };
  std::vector<Panel> panels;
  panels.reserve(static_cast<std::size_t>(max_subdivisions) + 1);
  PanelResult first = gk15(f, a, b);
  panels.push_back({a, b, first.value, first.error});

  for (;;) {
    double total = 0.0;
    double err = 0.0;
    for (const Panel& p : panels) {
      total += p.value;
      err += p.error;
    }
    if (err <= std::max(abs_tol, rel_tol * std::fabs(total)))
      return {total, err, true};
    if (static_cast<int>(panels.size()) >= max_subdivisions)
      return {total, err, false};

    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;
    const Panel p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    const PanelResult left = gk15(f, p.a, mid);
    const PanelResult right = gk15(f, mid, p.b);
    panels[worst] = {p.a, mid, left.value, left.error};
    panels.push_back({mid, p.b, right.value, right.error});
  }
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Average over a relay position uniform on [-(w), v] around the transmitter
// of the probability that the relay's own extent reaches the foot point.
// In substituted coordinates a = e^(-w/gamma), b = e^(-v/gamma) (transmitter
// at x >= 0, w <= x so the whole segment stays right of the foot point):
//   reach(a, b) = e^(-x/gamma) * (1 - ab) / (a * (-ln(ab))).
double relay_reach_right(double exp_mx, double a, double b) {
  const double m = -std::log(a * b);
  if (m < 1e-12) return exp_mx / a;
  return exp_mx * (-std::expm1(-m)) / (a * m);
}

struct IntegralParts {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
  double worst_achieved = 0.0;
  double worst_requested = 0.0;
};

void fold_failure(IntegralParts& parts, const QuadOutcome& q, double requested) {
  if (!q.converged) {
    parts.converged = false;
    parts.worst_achieved = std::max(parts.worst_achieved, q.error);
    parts.worst_requested = requested;
  }
}

// P(transmitter at abscissa x > 0 misses the foot point AND its relay
// misses it), complemented and assembled into the outer integral over x.
// The transmitter misses iff its left extent W < x; conditioned on (W, V)
// the relay term averages over the uniform relay position.
IntegralParts pair_reach_integral_parts(double gamma,
                                        const QuadratureSettings& s) {
  IntegralParts parts;
  if (gamma <= 0.0) return parts;

  const double cutoff = s.x_cutoff_multiplier * gamma;
  const double inner_rel = s.rel_tol / 8.0;
  const double inner_abs = s.abs_tol / 8.0;

  const auto reach_given_x = [&](double x) {
    const double exp_mx = std::exp(-x / gamma);
    const double a_min = exp_mx;  // a = e^(-w/gamma), w in [0, x]
    const auto outer_a = [&](double a) {
      const auto inner_b = [&](double b) { return relay_reach_right(exp_mx, a, b); };
      QuadOutcome inner = adaptive_gk(inner_b, 0.0, 1.0, inner_rel, inner_abs,
                                      s.max_subdivisions);
      fold_failure(parts, inner, inner_abs);
      return inner.value;
    };
    QuadOutcome mid = adaptive_gk(outer_a, a_min, 1.0, inner_rel, inner_abs,
                                  s.max_subdivisions);
    fold_failure(parts, mid, inner_abs);
    // miss-complement: transmitter reach e^(-x/gamma) plus relay reach.
    return exp_mx + mid.value;
  };

  QuadOutcome outer = adaptive_gk(reach_given_x, 0.0, cutoff, s.rel_tol,
                                  s.abs_tol, s.max_subdivisions);
  fold_failure(parts, outer, std::max(s.abs_tol, s.rel_tol));

  const double tail_bound =
      2.0 * gamma * (2.0 + s.x_cutoff_multiplier) * std::exp(-s.x_cutoff_multiplier);
  parts.value = 2.0 * outer.value;  // even integrand
  parts.error = 2.0 * outer.error + tail_bound;
  return parts;
}

}  // namespace

AreaFraction rsu_area_fraction(double lambda_l, double mu, double gamma,
                               double eta) {
  const double inner = -std::expm1(-2.0 * mu * gamma);
  const double value = -std::expm1(-lambda_l * eta * inner);
  return {clamp01(value), FractionMethod::closed_form, 0.0};
}

AreaFraction road_area_fraction(double lambda_l, double eta) {
  return {clamp01(-std::expm1(-lambda_l * eta)), FractionMethod::closed_form, 0.0};
}

double pair_reach_integral(double gamma, const QuadratureSettings& settings) {
  IntegralParts parts = pair_reach_integral_parts(gamma, settings);
  if (!parts.converged) {
    throw QuadratureError(
        "pair_reach_integral: quadrature did not converge (achieved error " +
            std::to_string(parts.worst_achieved) + ", requested " +
            std::to_string(parts.worst_requested) + ")",
        parts.worst_achieved, parts.worst_requested);
  }
  return parts.value;
}

AreaFraction rsu_relay_area_fraction_given_integral(double lambda_l, double mu,
                                                    double eta, double integral,
                                                    double integral_error) {
  const double inner = -std::expm1(-mu * integral);
  const double value = -std::expm1(-lambda_l * eta * inner);
  // first-order sensitivity of the composition in the integral
  const double dvalue_dI =
      (1.0 - value) * lambda_l * eta * mu * std::exp(-mu * integral);
  return {clamp01(value), FractionMethod::quadrature,
          std::fabs(dvalue_dI) * integral_error};
}

AreaFraction rsu_relay_area_fraction(double lambda_l, double mu, double gamma,
                                     double eta,
                                     const QuadratureSettings& settings) {
  IntegralParts parts = pair_reach_integral_parts(gamma, settings);
  if (!parts.converged) {
    throw QuadratureError(
        "rsu_relay_area_fraction: quadrature did not converge (achieved error " +
            std::to_string(parts.worst_achieved) + ", requested " +
            std::to_string(parts.worst_requested) + ")",
        parts.worst_achieved, parts.worst_requested);
  }
  return rsu_relay_area_fraction_given_integral(lambda_l, mu, eta, parts.value,
                                                parts.error);
}

double rsu_relay_area_fraction_alt_form(double lambda_l, double mu, double gamma,
                                        double eta,
                                        const QuadratureSettings& settings) {
  if (gamma <= 0.0) return 0.0;
  const double cutoff = settings.x_cutoff_multiplier * gamma;
  const double inner_rel = settings.rel_tol / 8.0;
  const double inner_abs = settings.abs_tol / 8.0;

  // Relay-reach average without the transmitter-miss indicator: w is
  // unbounded, so the segment may straddle the foot point.
  const auto integrand = [&](double x) {
    const auto outer_a = [&](double a) {
      const auto inner_b = [&](double b) {
        const double w = -gamma * std::log(a);
        const double v = -gamma * std::log(b);
        const double len = w + v;
        if (len < 1e-12 * gamma) return std::exp(-std::fabs(x) / gamma);
        // integral of e^(-|t|/gamma) over [x - w, x + v]
        auto prim = [&](double t) {
          return t >= 0.0 ? gamma * (1.0 - std::exp(-t / gamma))
                          : -gamma * (1.0 - std::exp(t / gamma));
        };
        return (prim(x + v) - prim(x - w)) / len;
      };
      return adaptive_gk(inner_b, 0.0, 1.0, inner_rel, inner_abs,
                         settings.max_subdivisions)
          .value;
    };
    const double reach_avg =
        adaptive_gk(outer_a, 0.0, 1.0, inner_rel, inner_abs,
                    settings.max_subdivisions)
            .value;
    return std::exp(-std::fabs(x) / gamma) - (1.0 - reach_avg);
  };

  const QuadOutcome outer = adaptive_gk(integrand, 0.0, cutoff, settings.rel_tol,
                                        settings.abs_tol, settings.max_subdivisions);
  const double integral = 2.0 * outer.value;
  const double inner = -std::expm1(-mu * integral);
  return -std::expm1(-lambda_l * eta * inner);  // not clamped: may leave [0, 1]
}

double additive_rsu_fraction(double lambda_l, double mu, double gamma, double eta) {
  return eta * lambda_l * linear_los_fraction(mu, gamma);
}

double linear_los_fraction(double mu, double gamma) {
  return clamp01(-std::expm1(-2.0 * mu * gamma));
}

double additive_error(double lambda_l, double mu, double gamma, double eta,
                      AdditiveErrorVariant variant) {
  const double linear = linear_los_fraction(mu, gamma);
  const double additive = lambda_l * eta * linear;
  const double factor = variant == AdditiveErrorVariant::doubled_exponent ? 2.0 : 1.0;
  const double exact = -std::expm1(-factor * lambda_l * eta * linear);
  return std::fabs(exact - additive);
}

std::optional<double> relay_gain_ratio(double lambda_l, double mu, double gamma,
                                       double eta,
                                       const QuadratureSettings& settings) {
  const AreaFraction base = rsu_area_fraction(lambda_l, mu, gamma, eta);
  if (base.value <= 0.0) return std::nullopt;
  const AreaFraction joint =
      rsu_relay_area_fraction(lambda_l, mu, gamma, eta, settings);
  return joint.value / base.value;
}

}  // namespace loscov
