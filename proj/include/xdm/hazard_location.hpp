#pragma once

#include "xdm/survival_model.hpp"

namespace xdm {

// Location family indexed by the hazard value at zero: member mu has
// survival y -> G(y + h^{-1}(mu)). Requires a strictly monotone hazard.
struct HazardLocationFamily {
  SurvivalModel generator;
  Interval rate_domain;  // h(support), the admissible rates
};

// Rate domain of a monotone-hazard model: stored closed form when the model
// carries one, otherwise hazard limits extrapolated toward the endpoints.
Interval rate_domain_of(const SurvivalModel& model);

HazardLocationFamily hl_family(const SurvivalModel& generator);

// Support point where the hazard equals mu. Uses the stored closed form
// unless use_closed is false, then a monotone bracketed search.
double hazard_inverse_value(const SurvivalModel& model, double mu,
                            bool use_closed = true);

// The member with rate exactly mu.
SurvivalModel hl_member(const HazardLocationFamily& family, double mu);

// Relocated copy: survival y -> G(y + delta), support shifted by -delta.
SurvivalModel shift_support(const SurvivalModel& model, double delta);

}  // namespace xdm
