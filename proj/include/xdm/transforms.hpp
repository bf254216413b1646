#pragma once

#include "xdm/slope.hpp"
#include "xdm/survival_model.hpp"
#include "xdm/xd.hpp"

namespace xdm {

// Law of Y given Y >= c on (c, b); hazard is unchanged, the integrated
// hazard is re-anchored at c.
SurvivalModel truncate_left(const SurvivalModel& model, double c);

// Observation stopped at c: support (a, c), censor mass G(c).
SurvivalModel censor_right(const SurvivalModel& model, double c);

// Law of -Y given Y >= b for a right censored model. Swaps the monotone
// class, keeps the rate domain, and is an involution.
SurvivalModel reflect_horizontal(const SurvivalModel& model);

// Vertical flip of the hazard around level m: the result has hazard
// m - h(-y) and slope v(m - mu) on (0, m). Requires (0, m) inside the
// rate domain and a censorable restriction.
SurvivalModel reflect_vertical(const SurvivalModel& model, double m);

// Competing independent exponential risk with rate m, anchored at the
// finite lower endpoint a: hazard h + m, survival G(y) exp(-m (y - a)).
// Negative m removes such a component and must keep the hazard positive.
SurvivalModel add_exponential_component(const SurvivalModel& model, double m);

// mu -> gamma_scale * v((mu - alpha) / beta) on alpha + beta * domain;
// the image domain must stay inside the positive half line.
SlopeFunction location_scale_slope(const SlopeFunction& slope, double alpha,
                                   double beta, double gamma_scale);

// Slope seen from level m: restrict the generator so that its rate domain
// starts at m, then remove an exponential component of rate m. The result
// is an XD model whose unit slope is v(m + mu) on the full positive half
// line. Requires the original rate domain to be all of (0, inf).
XDModel shift_transform(const XDModel& xd, double m);

}  // namespace xdm
