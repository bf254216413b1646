#include "xdm/slope.hpp"

#include <cmath>
#include <memory>
#include <utility>

#include "xdm/error.hpp"
#include "xdm/num/antiderivative.hpp"
#include "xdm/num/quadrature.hpp"

namespace xdm {

std::string to_string(SignClass sign) {
  return sign == SignClass::Positive ? "POSITIVE" : "NEGATIVE";
}

std::string to_string(SlopeVerdict verdict) {
  switch (verdict) {
    case SlopeVerdict::ValidProper: return "VALID_PROPER";
    case SlopeVerdict::ValidRightCensored: return "VALID_RIGHT_CENSORED";
    case SlopeVerdict::Invalid: return "INVALID";
  }
  return "INVALID";
}

SlopeFunction make_slope(RealFn v, Interval domain) {
  XDM_REQUIRE(domain.lower >= 0.0, errc::invalid_slope,
              "slope domain must lie in the positive half line");
  const Interval window = probe_window(domain);
  const int n = 129;
  double first = 0.0;
  for (int i = 0; i < n; ++i) {
    const double mu =
        window.lower + (window.upper - window.lower) * i / (n - 1);
    const double val = v(mu);
    XDM_REQUIRE(std::isfinite(val) && val != 0.0, errc::invalid_slope,
                "slope function must be finite and nonzero on its domain");
    if (i == 0) first = val;
    XDM_REQUIRE((val > 0.0) == (first > 0.0), errc::invalid_slope,
                "slope function changes sign on its domain");
  }
  const SignClass sign = first > 0.0 ? SignClass::Positive : SignClass::Negative;
  return SlopeFunction{std::move(v), domain, sign};
}

SlopeFunction slope_function_of(const HazardLocationFamily& family,
                                bool use_closed_inverse) {
  XDM_REQUIRE(family.generator.monotone_class() != MonotoneClass::None,
              errc::not_monotone, "slope extraction requires a monotone hazard");
  auto gen = std::make_shared<const SurvivalModel>(family.generator);
  const SignClass sign = family.generator.monotone_class() == MonotoneClass::Ifr
                             ? SignClass::Positive
                             : SignClass::Negative;
  // A stored slope short-circuits the inverse-then-differentiate chain; the
  // numeric route stays available for cross checks.
  if (use_closed_inverse && gen->has_slope())
    return SlopeFunction{gen->stored_slope(), family.rate_domain, sign};
  const double at_pole = sign == SignClass::Positive ? kInf : -kInf;
  RealFn v = [gen, use_closed_inverse, at_pole](double mu) {
    const double y = hazard_inverse_value(*gen, mu, use_closed_inverse);
    const double yc = gen->clamp_interior(y);
    if (y != yc) {
      // The inverse landed in the endpoint clamp band. When the hazard there
      // no longer reproduces the level, mu is beyond floating-point
      // resolution and the slope magnitude has already diverged.
      const double check = gen->hazard(yc);
      if (std::abs(check - mu) > 1e-6 * std::max(1.0, std::abs(mu)))
        return at_pole;
    }
    return gen->hazard_derivative(yc);
  };
  return SlopeFunction{std::move(v), family.rate_domain, sign};
}

namespace {

bool at_domain_edge(const Interval& domain, double mu) {
  return mu <= domain.lower || mu >= domain.upper;
}

}  // namespace

double hazard_interval_integral(const SlopeFunction& slope, double mu_c,
                                double mu_d) {
  const Interval& dom = slope.domain;
  XDM_REQUIRE(mu_c >= dom.lower && mu_c <= dom.upper && mu_d >= dom.lower &&
                  mu_d <= dom.upper,
              errc::domain_error,
              "integration limits outside the slope domain closure");
  if (mu_c == mu_d) return 0.0;
  RealFn v = slope.v;
  num::Fn f = [v](double m) { return m / v(m); };
  const bool c_edge = at_domain_edge(dom, mu_c);
  const bool d_edge = at_domain_edge(dom, mu_d);
  if (!c_edge && !d_edge) return num::integrate_signed(f, mu_c, mu_d);

  auto tail = [&f](double from, double endpoint) {
    num::TailIntegral t = num::integrate_to_endpoint(f, from, endpoint);
    if (t.divergent)
      raise(errc::divergent_integral,
            "hazard interval integral diverges toward mu = " +
                std::to_string(endpoint));
    return t.value;
  };
  if (c_edge && d_edge) {
    const double mid = dom.anchor();
    return tail(mid, mu_d) - tail(mid, mu_c);
  }
  if (d_edge) return tail(mu_c, mu_d);
  return -tail(mu_d, mu_c);
}

SlopeDiagnosis validate_slope(const SlopeFunction& slope) {
  const double anchor = slope.domain.anchor();
  RealFn v = slope.v;
  num::Fn f = [v](double m) { return m / std::abs(v(m)); };
  const bool positive = slope.sign_class == SignClass::Positive;
  const double a_end = positive ? slope.domain.lower : slope.domain.upper;
  const double b_end = positive ? slope.domain.upper : slope.domain.lower;
  const num::TailIntegral ta = num::integrate_to_endpoint(f, anchor, a_end);
  const num::TailIntegral tb = num::integrate_to_endpoint(f, anchor, b_end);
  SlopeDiagnosis d;
  d.left_integral = ta.divergent ? kInf : std::abs(ta.value);
  d.right_integral = tb.divergent ? kInf : std::abs(tb.value);
  d.continuity_at_a = !ta.divergent;
  if (ta.divergent) d.verdict = SlopeVerdict::Invalid;
  else if (tb.divergent) d.verdict = SlopeVerdict::ValidProper;
  else d.verdict = SlopeVerdict::ValidRightCensored;
  return d;
}

HazardLocationFamily reconstruct_from_slope(const SlopeFunction& slope,
                                            double mu0) {
  XDM_REQUIRE(slope.domain.contains(mu0), errc::invalid_slope,
              "reconstruction pin must be interior to the slope domain");
  RealFn v = slope.v;
  num::Fn inv_v = [v](double m) { return 1.0 / v(m); };
  num::Fn m_over_v = [v](double m) { return m / v(m); };
  auto psi = std::make_shared<num::MonotoneAntiderivative>(inv_v, slope.domain,
                                                           mu0);
  auto mass = std::make_shared<num::MonotoneAntiderivative>(
      m_over_v, slope.domain, mu0);

  const bool positive = slope.sign_class == SignClass::Positive;
  const num::TailIntegral& psi_a =
      positive ? psi->lower_tail() : psi->upper_tail();
  const num::TailIntegral& psi_b =
      positive ? psi->upper_tail() : psi->lower_tail();
  const num::TailIntegral& mass_a =
      positive ? mass->lower_tail() : mass->upper_tail();
  const num::TailIntegral& mass_b =
      positive ? mass->upper_tail() : mass->lower_tail();
  XDM_REQUIRE(!mass_a.divergent, errc::invalid_slope,
              "slope fails the continuity diagnostic, no distribution exists");

  const double a = psi_a.divergent ? -kInf : psi_a.value;
  const double b = psi_b.divergent ? kInf : psi_b.value;
  const double base_mass = -mass_a.value;
  const double censor =
      mass_b.divergent ? 0.0 : std::exp(-(base_mass + mass_b.value));

  SurvivalModelParts parts;
  parts.support = Interval(a, b);
  parts.hazard = [psi](double y) { return psi->inverse(y); };
  parts.hazard_derivative = [psi, v](double y) { return v(psi->inverse(y)); };
  parts.integrated_hazard = [psi, mass, base_mass](double y) {
    return base_mass + mass->value(psi->inverse(y));
  };
  parts.hazard_inverse = [psi](double mu) { return psi->value(mu); };
  parts.censor_mass = censor;
  parts.monotone_class = positive ? MonotoneClass::Ifr : MonotoneClass::Dfr;
  parts.rate_domain = slope.domain;
  parts.slope = slope.v;
  SurvivalModel generator(std::move(parts));
  return HazardLocationFamily{std::move(generator), slope.domain};
}

}  // namespace xdm
