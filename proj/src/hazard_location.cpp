#include "xdm/hazard_location.hpp"

#include <cmath>
#include <memory>

#include "xdm/error.hpp"
#include "xdm/num/roots.hpp"

namespace xdm {
namespace {

// Hazard limit toward an endpoint along a geometric approach sequence.
double hazard_endpoint_limit(const SurvivalModel& model, bool upper_end) {
  const Interval& c = model.support();
  const double edge = upper_end ? c.upper : c.lower;
  double prev = kInf;
  double value = kInf;
  bool decaying = true;
  if (std::isfinite(edge)) {
    const double sign = upper_end ? -1.0 : 1.0;
    const double scale = std::max(1.0, std::abs(edge));
    for (int k = 4; k <= 10; ++k) {
      const double y = edge + sign * scale * std::pow(10.0, -k);
      if (!c.contains(y)) continue;
      prev = value;
      value = model.hazard(y);
      if (value > 1e12) return kInf;
      decaying = std::isfinite(prev) && value < 0.9 * prev;
    }
  } else {
    double y = c.anchor();
    for (int k = 0; k < 60; ++k) {
      y = upper_end ? y + std::max(1.0, std::abs(y))
                    : y - std::max(1.0, std::abs(y));
      prev = value;
      value = model.hazard(y);
      if (value > 1e12) return kInf;
      if (value < 1e-300) return 0.0;
      decaying = std::isfinite(prev) && value < 0.9 * prev;
      if (std::isfinite(prev) &&
          std::abs(value - prev) <= 1e-9 * std::max(1.0, std::abs(value)))
        break;
    }
  }
  if (value > 1e12) return kInf;
  if (decaying && value < 1e-7) return 0.0;
  return value;
}

}  // namespace

Interval rate_domain_of(const SurvivalModel& model) {
  if (model.stored_rate_domain()) return *model.stored_rate_domain();
  const MonotoneClass mc = model.monotone_class();
  XDM_REQUIRE(mc != MonotoneClass::None, errc::not_monotone,
              "rate domain requires a monotone hazard");
  const double at_lower = hazard_endpoint_limit(model, false);
  const double at_upper = hazard_endpoint_limit(model, true);
  const double lo = mc == MonotoneClass::Ifr ? at_lower : at_upper;
  const double hi = mc == MonotoneClass::Ifr ? at_upper : at_lower;
  XDM_REQUIRE(lo < hi, errc::numerical_error, "degenerate rate domain");
  return {lo, hi};
}

HazardLocationFamily hl_family(const SurvivalModel& generator) {
  XDM_REQUIRE(generator.monotone_class() != MonotoneClass::None,
              errc::not_monotone,
              "hazard location family requires a monotone hazard");
  return {generator, rate_domain_of(generator)};
}

double hazard_inverse_value(const SurvivalModel& model, double mu,
                            bool use_closed) {
  if (use_closed && model.has_hazard_inverse())
    return model.hazard_inverse_closed(mu);
  const MonotoneClass mc = model.monotone_class();
  XDM_REQUIRE(mc != MonotoneClass::None, errc::not_monotone,
              "hazard inversion requires a monotone hazard");
  auto h = [&model](double y) { return model.hazard(y); };
  num::Bracket br = num::bracket_monotone(h, mu, model.support(),
                                          model.support().anchor(),
                                          mc == MonotoneClass::Ifr);
  if (br.lo == br.hi) return br.lo;
  num::Fn f = [&](double y) { return model.hazard(y) - mu; };
  num::Fn df = [&model](double y) { return model.hazard_derivative(y); };
  return num::find_root(f, br.lo, br.hi, br.flo, br.fhi, &df);
}

SurvivalModel hl_member(const HazardLocationFamily& family, double mu) {
  XDM_REQUIRE(family.rate_domain.contains(mu), errc::rate_out_of_domain,
              "rate outside the family's rate domain");
  const double y0 = hazard_inverse_value(family.generator, mu);
  return shift_support(family.generator, y0);
}

SurvivalModel shift_support(const SurvivalModel& model, double delta) {
  auto base = std::make_shared<const SurvivalModel>(model);
  SurvivalModelParts parts;
  parts.support =
      Interval(model.support().lower - delta, model.support().upper - delta);
  parts.integrated_hazard = [base, delta](double y) {
    return base->integrated_hazard(y + delta);
  };
  parts.survival = [base, delta](double y) { return base->survival(y + delta); };
  parts.hazard = [base, delta](double y) { return base->hazard(y + delta); };
  parts.hazard_derivative = [base, delta](double y) {
    return base->hazard_derivative(y + delta);
  };
  if (model.has_hazard_inverse()) {
    parts.hazard_inverse = [base, delta](double mu) {
      return base->hazard_inverse_closed(mu) - delta;
    };
  }
  if (model.has_hazard_d2()) {
    parts.hazard_d2 = [base, delta](double y) { return base->hazard_d2(y + delta); };
  }
  if (model.has_hazard_d3()) {
    parts.hazard_d3 = [base, delta](double y) { return base->hazard_d3(y + delta); };
  }
  parts.censor_mass = model.censor_mass();
  parts.monotone_class = model.monotone_class();
  parts.rate_domain = model.stored_rate_domain();
  parts.slope = model.stored_slope();
  return SurvivalModel(std::move(parts));
}

}  // namespace xdm
