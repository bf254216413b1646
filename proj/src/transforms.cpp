#include "xdm/transforms.hpp"

#include <cmath>
#include <memory>
#include <optional>

#include "xdm/error.hpp"
#include "xdm/hazard_location.hpp"
#include "xdm/num/quadrature.hpp"

namespace xdm {

namespace {

MonotoneClass classify_sign(const RealFn& hazard_derivative, const Interval& support) {
  const Interval w = probe_window(support);
  bool up = true;
  bool down = true;
  for (int i = 0; i < 129; ++i) {
    const double y = w.lower + (i + 0.5) * w.width() / 129.0;
    const double d = hazard_derivative(y);
    if (!(d > 0.0)) up = false;
    if (!(d < 0.0)) down = false;
  }
  if (up && !down) return MonotoneClass::Ifr;
  if (down && !up) return MonotoneClass::Dfr;
  return MonotoneClass::None;
}

// Rate domain of a support restriction: the cut replaces the endpoint value
// on the side it removed.
std::optional<Interval> restricted_rate_domain(const SurvivalModel& model,
                                               double hazard_at_cut, bool cut_left) {
  const MonotoneClass cls = model.monotone_class();
  if (cls == MonotoneClass::None) return {};
  const Interval psi = rate_domain_of(model);
  const bool replaces_lower = (cls == MonotoneClass::Ifr) == cut_left;
  if (replaces_lower) return Interval(hazard_at_cut, psi.upper);
  return Interval(psi.lower, hazard_at_cut);
}

}  // namespace

SurvivalModel truncate_left(const SurvivalModel& model, double c) {
  XDM_REQUIRE(model.support().contains(c), errc::out_of_support,
              "truncation point must lie in the open support");
  auto base = std::make_shared<const SurvivalModel>(model);
  const double head = model.integrated_hazard(c);

  SurvivalModelParts parts;
  parts.support = Interval(c, model.support().upper);
  parts.integrated_hazard = [base, head](double y) {
    return base->integrated_hazard(y) - head;
  };
  // Difference hazards before exponentiating: survival ratios underflow for
  // sharply concentrated models while the hazard increment stays moderate.
  parts.survival = [base, head](double y) {
    return std::exp(head - base->integrated_hazard(y));
  };
  parts.hazard = [base](double y) { return base->hazard(y); };
  parts.hazard_derivative = [base](double y) { return base->hazard_derivative(y); };
  if (base->has_hazard_d2())
    parts.hazard_d2 = [base](double y) { return base->hazard_d2(y); };
  if (base->has_hazard_d3())
    parts.hazard_d3 = [base](double y) { return base->hazard_d3(y); };
  if (base->has_hazard_inverse())
    parts.hazard_inverse = [base](double mu) { return base->hazard_inverse_closed(mu); };
  const double censor0 = model.censor_mass();
  parts.censor_mass = censor0 > 0.0 ? std::exp(head + std::log(censor0)) : 0.0;
  parts.rate_domain = restricted_rate_domain(model, model.hazard(c), true);
  parts.slope = model.stored_slope();
  parts.monotone_class = model.monotone_class() != MonotoneClass::None
                             ? model.monotone_class()
                             : classify_sign(parts.hazard_derivative, parts.support);
  return SurvivalModel(std::move(parts));
}

SurvivalModel censor_right(const SurvivalModel& model, double c) {
  XDM_REQUIRE(model.support().contains(c), errc::out_of_support,
              "censoring point must lie in the open support");
  auto base = std::make_shared<const SurvivalModel>(model);

  SurvivalModelParts parts;
  parts.support = Interval(model.support().lower, c);
  parts.integrated_hazard = [base](double y) { return base->integrated_hazard(y); };
  parts.survival = [base](double y) { return base->survival(y); };
  parts.hazard = [base](double y) { return base->hazard(y); };
  parts.hazard_derivative = [base](double y) { return base->hazard_derivative(y); };
  if (base->has_hazard_d2())
    parts.hazard_d2 = [base](double y) { return base->hazard_d2(y); };
  if (base->has_hazard_d3())
    parts.hazard_d3 = [base](double y) { return base->hazard_d3(y); };
  if (base->has_hazard_inverse())
    parts.hazard_inverse = [base](double mu) { return base->hazard_inverse_closed(mu); };
  parts.censor_mass = model.survival(c);
  parts.rate_domain = restricted_rate_domain(model, model.hazard(c), false);
  parts.slope = model.stored_slope();
  parts.monotone_class = model.monotone_class() != MonotoneClass::None
                             ? model.monotone_class()
                             : classify_sign(parts.hazard_derivative, parts.support);
  return SurvivalModel(std::move(parts));
}

SurvivalModel reflect_horizontal(const SurvivalModel& model) {
  const double gamma0 = model.censor_mass();
  XDM_REQUIRE(gamma0 > 0.0, errc::not_censored,
              "horizontal reflection requires a right censored model");
  auto base = std::make_shared<const SurvivalModel>(model);
  const double total = -std::log(gamma0);

  SurvivalModelParts parts;
  parts.support =
      Interval(-model.support().upper + 0.0, -model.support().lower + 0.0);
  parts.integrated_hazard = [base, total](double y) {
    return total - base->integrated_hazard(-y);
  };
  parts.survival = [base, gamma0](double y) { return gamma0 / base->survival(-y); };
  parts.hazard = [base](double y) { return base->hazard(-y); };
  parts.hazard_derivative = [base](double y) { return -base->hazard_derivative(-y); };
  if (base->has_hazard_d2())
    parts.hazard_d2 = [base](double y) { return base->hazard_d2(-y); };
  if (base->has_hazard_d3())
    parts.hazard_d3 = [base](double y) { return -base->hazard_d3(-y); };
  if (base->has_hazard_inverse())
    parts.hazard_inverse = [base](double mu) { return -base->hazard_inverse_closed(mu); };
  parts.censor_mass = gamma0;
  switch (model.monotone_class()) {
    case MonotoneClass::Ifr: parts.monotone_class = MonotoneClass::Dfr; break;
    case MonotoneClass::Dfr: parts.monotone_class = MonotoneClass::Ifr; break;
    case MonotoneClass::None: parts.monotone_class = MonotoneClass::None; break;
  }
  if (model.stored_rate_domain()) parts.rate_domain = *model.stored_rate_domain();
  if (model.has_slope()) {
    RealFn v = model.stored_slope();
    parts.slope = [v](double mu) { return -v(mu); };
  }
  return SurvivalModel(std::move(parts));
}

SurvivalModel reflect_vertical(const SurvivalModel& model, double m) {
  XDM_REQUIRE(std::isfinite(m) && m > 0.0, errc::invalid_argument,
              "reflection level must be positive and finite");
  XDM_REQUIRE(model.monotone_class() != MonotoneClass::None, errc::not_monotone,
              "vertical reflection requires a monotone hazard");
  const Interval psi = rate_domain_of(model);
  XDM_REQUIRE(psi.lower <= 1e-9 && m < psi.upper, errc::domain_too_small,
              "(0, m) must lie inside the rate domain");

  const double cut = hazard_inverse_value(model, m);
  const SurvivalModel restricted = model.monotone_class() == MonotoneClass::Ifr
                                       ? censor_right(model, cut)
                                       : truncate_left(model, cut);
  const double b0 = restricted.support().upper;
  const double g0 = restricted.censor_mass();
  XDM_REQUIRE(std::isfinite(b0) && g0 > 0.0, errc::not_censorable,
              "the restricted model must be right censored at a finite point");
  const double a0 = restricted.support().lower;
  auto base = std::make_shared<const SurvivalModel>(restricted);
  const double log_g0 = std::log(g0);

  SurvivalModelParts parts;
  parts.support = Interval(-b0 + 0.0, -a0 + 0.0);
  parts.integrated_hazard = [base, log_g0, m, b0](double y) {
    return base->integrated_hazard(-y) + log_g0 + m * (y + b0);
  };
  parts.survival = [base, g0, m, b0](double y) {
    return base->survival(-y) / g0 * std::exp(-m * (y + b0));
  };
  parts.hazard = [base, m](double y) { return m - base->hazard(-y); };
  parts.hazard_derivative = [base](double y) { return base->hazard_derivative(-y); };
  if (base->has_hazard_d2())
    parts.hazard_d2 = [base](double y) { return -base->hazard_d2(-y); };
  if (base->has_hazard_d3())
    parts.hazard_d3 = [base](double y) { return base->hazard_d3(-y); };
  if (base->has_hazard_inverse())
    parts.hazard_inverse = [base, m](double mu) {
      return -base->hazard_inverse_closed(m - mu);
    };
  parts.censor_mass =
      std::isfinite(a0) ? std::exp(-m * (b0 - a0)) / g0 : 0.0;
  parts.monotone_class = model.monotone_class();
  parts.rate_domain = Interval(0.0, m - std::max(0.0, psi.lower));
  if (model.has_slope()) {
    RealFn v = model.stored_slope();
    parts.slope = [v, m](double mu) { return v(m - mu); };
  }
  return SurvivalModel(std::move(parts));
}

SurvivalModel add_exponential_component(const SurvivalModel& model, double m) {
  XDM_REQUIRE(std::isfinite(m), errc::invalid_argument,
              "component rate must be finite");
  const Interval support = model.support();
  XDM_REQUIRE(std::isfinite(support.lower), errc::unbounded_support,
              "adding an exponential component requires a finite lower endpoint");
  if (m == 0.0) return model;

  std::optional<Interval> psi;
  if (model.monotone_class() != MonotoneClass::None) psi = rate_domain_of(model);
  if (m < 0.0) {
    XDM_REQUIRE(psi.has_value(), errc::not_monotone,
                "removing a component requires a monotone hazard");
    XDM_REQUIRE(m >= -psi->lower - 1e-9, errc::negativity_violation,
                "removal rate exceeds the infimum of the hazard");
  }

  auto base = std::make_shared<const SurvivalModel>(model);
  const double a = support.lower;

  SurvivalModelParts parts;
  parts.support = support;
  parts.integrated_hazard = [base, m, a](double y) {
    return base->integrated_hazard(y) + m * (y - a);
  };
  // Sum the hazards before exponentiating; for m < 0 the survival factor
  // underflows while the exponential factor overflows, though the combined
  // exponent stays moderate.
  parts.survival = [base, m, a](double y) {
    return std::exp(-(base->integrated_hazard(y) + m * (y - a)));
  };
  parts.hazard = [base, m](double y) { return base->hazard(y) + m; };
  parts.hazard_derivative = [base](double y) { return base->hazard_derivative(y); };
  if (base->has_hazard_d2())
    parts.hazard_d2 = [base](double y) { return base->hazard_d2(y); };
  if (base->has_hazard_d3())
    parts.hazard_d3 = [base](double y) { return base->hazard_d3(y); };
  if (base->has_hazard_inverse())
    parts.hazard_inverse = [base, m](double mu) {
      return base->hazard_inverse_closed(mu - m);
    };
  parts.monotone_class = model.monotone_class();
  if (psi) parts.rate_domain = Interval(std::max(0.0, psi->lower + m), psi->upper + m);
  if (model.has_slope()) {
    RealFn v = model.stored_slope();
    parts.slope = [v, m](double mu) { return v(mu - m); };
  }

  const double b = support.upper;
  if (std::isfinite(b)) {
    parts.censor_mass = model.censor_mass() * std::exp(-m * (b - a));
  } else {
    // On an unbounded support the new tail hazard decides properness. Its
    // limit can be read off the rate domain when one is known; a positive
    // limit integrates to an infinite hazard, so only a vanishing limit
    // calls for the numeric tail.
    double limit_rate = m;
    if (psi)
      limit_rate =
          (model.monotone_class() == MonotoneClass::Ifr ? psi->upper : psi->lower) +
          m;
    if (limit_rate > 0.0) {
      parts.censor_mass = 0.0;
    } else {
      const double y1 = support.anchor();
      const num::TailIntegral tail = num::integrate_to_endpoint(
          [base, m](double y) { return base->hazard(y) + m; }, y1, kInf);
      parts.censor_mass =
          tail.divergent
              ? 0.0
              : std::exp(-(model.integrated_hazard(y1) + m * (y1 - a) + tail.value));
    }
  }
  return SurvivalModel(std::move(parts));
}

SlopeFunction location_scale_slope(const SlopeFunction& slope, double alpha,
                                   double beta, double gamma_scale) {
  XDM_REQUIRE(std::isfinite(alpha), errc::invalid_argument,
              "location offset must be finite");
  XDM_REQUIRE(std::isfinite(beta) && beta > 0.0, errc::invalid_argument,
              "argument scale must be positive and finite");
  XDM_REQUIRE(std::isfinite(gamma_scale) && gamma_scale > 0.0, errc::invalid_argument,
              "value scale must be positive and finite");
  const double lo = alpha + beta * slope.domain.lower;
  const double hi = alpha + beta * slope.domain.upper;
  XDM_REQUIRE(lo >= 0.0, errc::domain_violation,
              "the mapped domain must stay inside the positive half line");
  RealFn v = slope.v;
  return SlopeFunction{
      [v, alpha, beta, gamma_scale](double mu) {
        return gamma_scale * v((mu - alpha) / beta);
      },
      Interval(lo, hi), slope.sign_class};
}

XDModel shift_transform(const XDModel& xd, double m) {
  XDM_REQUIRE(std::isfinite(m) && m > 0.0, errc::invalid_argument,
              "shift level must be positive and finite");
  const Interval psi = xd.unit_slope.domain;
  XDM_REQUIRE(psi.lower <= 1e-9 && psi.upper == kInf, errc::domain_not_full,
              "shift requires the rate domain to be the full positive half line");
  const SurvivalModel& gen = xd.generator;
  XDM_REQUIRE(gen.monotone_class() != MonotoneClass::None, errc::not_monotone,
              "shift requires a monotone hazard");
  const double cut = hazard_inverse_value(gen, m);
  const SurvivalModel restricted = gen.monotone_class() == MonotoneClass::Ifr
                                       ? truncate_left(gen, cut)
                                       : censor_right(gen, cut);
  return xd_make(add_exponential_component(restricted, -m), xd.mu, xd.lambda);
}

}  // namespace xdm
