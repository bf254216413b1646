#include "xdm/xd.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "xdm/error.hpp"
#include "xdm/num/antiderivative.hpp"
#include "xdm/num/quadrature.hpp"
#include "xdm/transforms.hpp"

namespace xdm {

XDModel xd_make(const SurvivalModel& generator, double mu, double lambda) {
  XDM_REQUIRE(std::isfinite(lambda) && lambda > 0.0, errc::invalid_argument,
              "dispersion must be positive and finite");
  HazardLocationFamily family = hl_family(generator);
  XDM_REQUIRE(family.rate_domain.contains(mu), errc::rate_out_of_domain,
              "rate must lie in the rate domain");
  SlopeFunction unit = slope_function_of(family);

  const double x0 = hazard_inverse_value(generator, mu);
  auto base = std::make_shared<const SurvivalModel>(generator);
  const Interval support = generator.support();

  SurvivalModelParts parts;
  parts.support =
      Interval(lambda * (support.lower - x0), lambda * (support.upper - x0));
  parts.integrated_hazard = [base, lambda, x0](double y) {
    return lambda * base->integrated_hazard(y / lambda + x0);
  };
  parts.survival = [base, lambda, x0](double y) {
    return std::pow(base->survival(y / lambda + x0), lambda);
  };
  parts.hazard = [base, lambda, x0](double y) {
    return base->hazard(y / lambda + x0);
  };
  parts.hazard_derivative = [base, lambda, x0](double y) {
    return base->hazard_derivative(y / lambda + x0) / lambda;
  };
  if (base->has_hazard_d2())
    parts.hazard_d2 = [base, lambda, x0](double y) {
      return base->hazard_d2(y / lambda + x0) / (lambda * lambda);
    };
  if (base->has_hazard_d3())
    parts.hazard_d3 = [base, lambda, x0](double y) {
      return base->hazard_d3(y / lambda + x0) / (lambda * lambda * lambda);
    };
  if (base->has_hazard_inverse())
    parts.hazard_inverse = [base, lambda, x0](double m) {
      return lambda * (base->hazard_inverse_closed(m) - x0);
    };
  parts.censor_mass = std::pow(generator.censor_mass(), lambda);
  parts.monotone_class = generator.monotone_class();
  parts.rate_domain = family.rate_domain;
  {
    RealFn v = unit.v;
    parts.slope = [v, lambda](double m) { return v(m) / lambda; };
  }

  return XDModel{generator, mu, lambda, std::move(unit),
                 SurvivalModel(std::move(parts))};
}

XDModel scaled_min(const XDModel& xd, long long n) {
  XDM_REQUIRE(n >= 1, errc::invalid_argument, "group size must be at least 1");
  return xd_make(xd.generator, xd.mu, xd.lambda * static_cast<double>(n));
}

SurvivalModel conditional_tail(const XDModel& xd, double c) {
  return shift_support(truncate_left(xd.member, c), c);
}

Eigen::ArrayXd rayleigh_limit_curve(const SurvivalModel& generator, long long n,
                                    const Eigen::ArrayXd& y_grid) {
  XDM_REQUIRE(n >= 1, errc::invalid_argument, "group size must be at least 1");
  XDM_REQUIRE(generator.support().contains(0.0), errc::out_of_support,
              "zero must lie in the open support");
  const auto [rate, slope] = rate_and_slope(generator);
  XDM_REQUIRE(slope > 0.0, errc::nonpositive_slope,
              "the hazard slope at zero must be positive");

  const double count = static_cast<double>(n);
  const double root = std::sqrt(count);
  const double head = generator.integrated_hazard(0.0);
  Eigen::ArrayXd out(y_grid.size());
  for (Eigen::Index i = 0; i < y_grid.size(); ++i) {
    const double y = y_grid[i];
    const double exponent =
        -count * (generator.integrated_hazard(y / root) - head) + y * rate * root;
    out[i] = std::exp(exponent);
  }
  return out;
}

FrailtyLink make_frailty_link(RealFn variance_function, Interval vf_domain,
                              std::optional<double> pin) {
  XDM_REQUIRE(vf_domain.lower >= 0.0, errc::invalid_argument,
              "mean domain must lie in the positive half line");
  const double pin_point = pin.value_or(vf_domain.anchor());
  XDM_REQUIRE(vf_domain.contains(pin_point), errc::invalid_argument,
              "pin must lie in the mean domain");

  const Interval w = probe_window(vf_domain);
  for (int i = 0; i < 129; ++i) {
    const double mu = w.lower + (i + 0.5) * w.width() / 129.0;
    const double value = variance_function(mu);
    XDM_REQUIRE(std::isfinite(value) && value > 0.0, errc::invalid_variance_function,
                "variance function must be positive and finite on the mean domain");
  }

  RealFn vf = variance_function;
  auto theta = std::make_shared<num::MonotoneAntiderivative>(
      [vf](double mu) { return 1.0 / vf(mu); }, vf_domain, pin_point);
  const double lo =
      theta->lower_tail().divergent ? -kInf : theta->lower_tail().value;
  const double hi = theta->upper_tail().divergent ? kInf : theta->upper_tail().value;
  RealFn mean_mapping = [theta](double t) { return theta->inverse(t); };
  return FrailtyLink{std::move(vf), vf_domain, std::move(mean_mapping),
                     Interval(lo, hi), pin_point};
}

SurvivalModel frailty_generator(const FrailtyLink& link) {
  RealFn vf = link.variance_function;
  const Interval slope_domain(link.vf_domain.lower, link.pin);
  const SlopeFunction slope =
      make_slope([vf](double mu) { return -vf(mu); }, slope_domain);
  const HazardLocationFamily family =
      reconstruct_from_slope(slope, slope_domain.anchor());
  return shift_support(family.generator, family.generator.support().lower);
}

XDModel frailty_xd(const FrailtyLink& link, double mu, double lambda) {
  XDM_REQUIRE(link.vf_domain.lower < mu && mu < link.pin, errc::rate_out_of_domain,
              "rate must lie below the pin inside the mean domain");
  return xd_make(frailty_generator(link), mu, lambda);
}

}  // namespace xdm
