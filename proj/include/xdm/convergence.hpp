#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xdm/interval.hpp"
#include "xdm/slope.hpp"
#include "xdm/survival_model.hpp"
#include "xdm/xd.hpp"

namespace xdm {

// Side of the rate domain, named after the support endpoint it maps to:
// Left is the end reached as y approaches the lower endpoint.
enum class Side { Left, Right };

struct ConvergenceStep {
  double index;
  double slope_sup_distance;
  double survival_sup_distance;
  double tightness_integral;
};

struct ConvergenceReport {
  std::vector<ConvergenceStep> steps;
  std::string limit_family;
  Interval compact_window{0.0, 1.0};
  bool passed = false;
  double tolerance = 0.0;
  double tightness_bound = 0.0;
};

// Sup distance over a 512-point grid on the window, which must lie inside
// both slope domains.
double slope_sequence_distance(const SlopeFunction& a, const SlopeFunction& b,
                               const Interval& window);

// Mass integral of mu / |v| from eta to the requested end of the domain.
// Returns +inf when the integral diverges.
double tightness_integral(const SlopeFunction& slope, double eta, Side side);

// Evaluation window inside the support: finite endpoints inset by 1e-3,
// clipped to [-3, 3].
Interval default_window(const Interval& support);

struct GevOptions {
  std::vector<long long> n_values;
  std::optional<double> p;  // power index; estimated from the slope when absent
  std::optional<Interval> window;
  double tolerance = 1e-2;
  std::optional<double> tightness_bound;
};

// Scaled minima n^{1/(p-2)} min(Y_1..Y_n) of XD(mu, lambda) members against
// the extreme value limit with gamma = (1-p)/(p-2). The rate mu is preserved
// along the whole sequence.
ConvergenceReport gev_convergence_experiment(const SurvivalModel& generator,
                                             double mu, double lambda,
                                             const GevOptions& options);

struct ExpSlopeOptions {
  std::vector<double> m_values;
  std::optional<Interval> window;
  double tolerance = 1e-2;
  std::optional<double> tightness_bound;
};

// Slope seen from level m with dispersion rescaled by exp(beta m), against
// the fixed point family with slope proportional to exp(beta mu).
ConvergenceReport exp_slope_convergence_experiment(
    const SurvivalModel& generator, double mu, double lambda, double beta,
    const ExpSlopeOptions& options);

}  // namespace xdm
