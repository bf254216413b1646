#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "xdm/interval.hpp"

namespace xdm {

enum class MonotoneClass { Ifr, Dfr, None };

const char* to_string(MonotoneClass c);

using RealFn = std::function<double(double)>;

// Ingredients for a SurvivalModel. Interior closed forms only; the model
// applies the boundary conventions. `survival` defaults to exp(-H);
// the optional closures unlock closed-form paths where available.
struct SurvivalModelParts {
  Interval support{0.0, 1.0};
  RealFn integrated_hazard;  // H on the support interior, H(a+) = 0
  RealFn hazard;             // h = H' > 0 on the interior
  RealFn hazard_derivative;  // h'
  RealFn survival;           // optional closed-form G
  RealFn hazard_inverse;     // optional closed-form h^{-1} on the rate domain
  RealFn hazard_d2;          // optional h''
  RealFn hazard_d3;          // optional h'''
  double censor_mass = 0.0;  // G(b); > 0 means right censoring at b
  MonotoneClass monotone_class = MonotoneClass::None;
  std::optional<Interval> rate_domain;  // h(support), when known in closed form
  RealFn slope;  // optional closed-form h' o h^{-1} on the rate domain
};

// Distribution described through its survival function G(y) = P(Y >= y),
// twice continuously differentiable on the open support, continuous at the
// lower endpoint, possibly censored at the upper one. Immutable value type.
//
// Conventions outside the support: H = 0 and G = 1 to the left; to the right
// H = +inf and G = 0, except that a censored model keeps the finite limit
// H(b) = -log(censor_mass) at the endpoint itself. Queries within 1e-12
// (relative) of a finite endpoint are clamped to the interior.
class SurvivalModel {
 public:
  explicit SurvivalModel(SurvivalModelParts parts);

  double survival(double y) const;
  double integrated_hazard(double y) const;
  double hazard(double y) const;
  double hazard_derivative(double y) const;

  const Interval& support() const { return parts_.support; }
  double censor_mass() const { return parts_.censor_mass; }
  MonotoneClass monotone_class() const { return parts_.monotone_class; }
  bool is_proper() const;

  bool has_hazard_inverse() const { return static_cast<bool>(parts_.hazard_inverse); }
  bool has_hazard_d2() const { return static_cast<bool>(parts_.hazard_d2); }
  bool has_hazard_d3() const { return static_cast<bool>(parts_.hazard_d3); }
  double hazard_inverse_closed(double mu) const;
  double hazard_d2(double y) const;
  double hazard_d3(double y) const;
  const std::optional<Interval>& stored_rate_domain() const {
    return parts_.rate_domain;
  }
  bool has_slope() const { return static_cast<bool>(parts_.slope); }
  double slope_closed(double mu) const { return parts_.slope(mu); }
  const RealFn& stored_slope() const { return parts_.slope; }

  // Clamp a query to the interior per the endpoint convention.
  double clamp_interior(double y) const;

 private:
  SurvivalModelParts parts_;
};

inline constexpr double kEndpointClamp = 1e-12;

struct Semiinvariants {
  int order;
  std::vector<double> values;  // values[i-1] = H^{(i)}(0), i = 1..order
};

// Hazard value and hazard slope at zero: (h(0), h'(0)). Zero must lie in the
// open support.
std::pair<double, double> rate_and_slope(const SurvivalModel& model);

// Slope at zero through the density route mu*(mu - g'(0)), g = -log f, with
// g' evaluated by a plain central difference.
double slope_via_varform(const SurvivalModel& model);

// H^{(1..order)}(0), order <= 4. Uses closed-form hazard derivatives where
// the model carries them, Richardson-extrapolated differences otherwise.
Semiinvariants semiinvariants(const SurvivalModel& model, int order);

// Distribution of the pointwise minimum: H_min = sum H_i under the boundary
// conventions. Supports must share a nonempty open intersection.
SurvivalModel min_of(const std::vector<SurvivalModel>& models);

// Distribution of c*Y for c > 0.
SurvivalModel scale_model(const SurvivalModel& model, double c);

// Inverse-transform sampling; censored draws land on the upper endpoint
// (+inf when the model is improper). Deterministic in (seed).
Eigen::ArrayXd sample(const SurvivalModel& model, long n, std::uint64_t seed);

// Grid classification of the hazard-derivative sign over a probe window.
MonotoneClass classify_monotone(const SurvivalModel& model, int grid = 129);

// Sup distance between survival functions on an evaluation grid.
double survival_sup_distance(const SurvivalModel& a, const SurvivalModel& b,
                             const Interval& window, int grid = 512);

}  // namespace xdm
