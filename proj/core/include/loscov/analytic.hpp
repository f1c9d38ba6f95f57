#pragma once

#include <optional>
#include <stdexcept>

namespace loscov {

// Controls for the deterministic quadrature behind the relay coverage
// fraction. The improper outer integral is truncated at
// |x| <= x_cutoff_multiplier * gamma; the relative tail contribution is
// bounded by (2 + K) e^-K for multiplier K.
struct QuadratureSettings {
  double x_cutoff_multiplier = 12.0;
  double rel_tol = 1e-6;
  double abs_tol = 1e-9;
  int max_subdivisions = 200;
};

enum class FractionMethod { closed_form, quadrature, monte_carlo };

// A mean area fraction in [0, 1] together with how it was computed and a
// bound on its numerical error.
struct AreaFraction {
  double value = 0.0;
  FractionMethod method = FractionMethod::closed_form;
  double error_bound = 0.0;
};

// Thrown when adaptive quadrature cannot reach the requested tolerance
// within the subdivision budget.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved, double requested)
      : std::runtime_error(what), achieved_error(achieved),
        requested_tolerance(requested) {}

  double achieved_error;
  double requested_tolerance;
};

// Mean area fraction of transmitter-only LOS coverage:
//   1 - exp(-lambda_l * eta * (1 - e^(-2 mu gamma))).
AreaFraction rsu_area_fraction(double lambda_l, double mu, double gamma, double eta);

// Mean area fraction of the roads themselves, 1 - exp(-lambda_l * eta).
// This is the supremum of every LOS coverage fraction in the model.
AreaFraction road_area_fraction(double lambda_l, double eta);

// Mean measure (in meters) of transmitter abscissas x for which the
// transmitter at x or its relay reaches the foot point of the line. The
// relay is uniform on the transmitter's LOS segment and carries fresh
// exponential extents. Evaluated by adaptive 2-D quadrature after reducing
// the relay-position average to closed form; the exponential (W, V) weights
// are absorbed with the substitution w = -gamma ln u.
double pair_reach_integral(double gamma, const QuadratureSettings& settings = {});

// Mean area fraction of joint transmitter-plus-relay LOS coverage:
//   1 - exp(-lambda_l * eta * (1 - e^(-mu * I)))  with I = pair_reach_integral.
AreaFraction rsu_relay_area_fraction(double lambda_l, double mu, double gamma,
                                     double eta,
                                     const QuadratureSettings& settings = {});

// Same composition for a precomputed integral value (lets sweeps reuse one
// quadrature across rows that share gamma).
AreaFraction rsu_relay_area_fraction_given_integral(double lambda_l, double mu,
                                                    double eta, double integral,
                                                    double integral_error);

// Diagnostic only: evaluates an alternative per-transmitter integrand that
// omits the transmitter-miss indicator. That integrand tends to -1 for
// large |x|, so its integral over the whole line diverges and the result
// depends on the cutoff; it is exposed to make the defect measurable.
double rsu_relay_area_fraction_alt_form(double lambda_l, double mu, double gamma,
                                        double eta,
                                        const QuadratureSettings& settings = {});

// Additive (overlap-ignoring) coverage estimate eta * lambda_l * (1 - e^(-2 mu gamma)).
// Deliberately not clamped: it exceeds the exact fraction and can exceed 1.
double additive_rsu_fraction(double lambda_l, double mu, double gamma, double eta);

// Fraction of a single line covered by its transmitters' LOS segments,
// 1 - e^(-2 mu gamma).
double linear_los_fraction(double mu, double gamma);

// Error of the additive approach against the exact fraction.
//   consistent:       |(1 - e^(-lambda_l eta u)) - lambda_l eta u'|  (exact form)
//   doubled_exponent: variant with 2 lambda_l eta in the exponent, kept
//                     because published material states it that way.
enum class AdditiveErrorVariant { consistent, doubled_exponent };

double additive_error(double lambda_l, double mu, double gamma, double eta,
                      AdditiveErrorVariant variant = AdditiveErrorVariant::consistent);

// rsu_relay_area_fraction / rsu_area_fraction; empty when the denominator
// is zero.
std::optional<double> relay_gain_ratio(double lambda_l, double mu, double gamma,
                                       double eta,
                                       const QuadratureSettings& settings = {});

}  // namespace loscov
