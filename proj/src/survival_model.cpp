#include "xdm/survival_model.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "xdm/error.hpp"
#include "xdm/num/derivative.hpp"
#include "xdm/num/rng.hpp"
#include "xdm/num/roots.hpp"

namespace xdm {

const char* to_string(MonotoneClass c) {
  switch (c) {
    case MonotoneClass::Ifr: return "IFR";
    case MonotoneClass::Dfr: return "DFR";
    case MonotoneClass::None: return "NONE";
  }
  return "NONE";
}

SurvivalModel::SurvivalModel(SurvivalModelParts parts) : parts_(std::move(parts)) {
  XDM_REQUIRE(static_cast<bool>(parts_.integrated_hazard), errc::invalid_argument,
              "survival model requires an integrated hazard");
  XDM_REQUIRE(static_cast<bool>(parts_.hazard), errc::invalid_argument,
              "survival model requires a hazard function");
  XDM_REQUIRE(static_cast<bool>(parts_.hazard_derivative), errc::invalid_argument,
              "survival model requires a hazard derivative");
  XDM_REQUIRE(parts_.censor_mass >= 0.0 && parts_.censor_mass < 1.0,
              errc::invalid_argument, "censor mass must lie in [0, 1)");
  if (parts_.monotone_class == MonotoneClass::Dfr)
    XDM_REQUIRE(std::isfinite(parts_.support.lower), errc::domain_error,
                "a decreasing hazard requires a finite lower endpoint");
  // censor_mass > 0 with b = +inf is the improper case, allowed as is.
  if (!parts_.survival) {
    auto H = parts_.integrated_hazard;
    parts_.survival = [H](double y) { return std::exp(-H(y)); };
  }
}

bool SurvivalModel::is_proper() const {
  return parts_.censor_mass == 0.0 || std::isfinite(parts_.support.upper);
}

double SurvivalModel::clamp_interior(double y) const {
  const double a = parts_.support.lower;
  const double b = parts_.support.upper;
  if (std::isfinite(a)) {
    const double eps = kEndpointClamp * std::max(1.0, std::abs(a));
    if (y >= a - eps && y <= a + eps) return a + eps;
  }
  if (std::isfinite(b)) {
    const double eps = kEndpointClamp * std::max(1.0, std::abs(b));
    if (y >= b - eps && y <= b + eps) return b - eps;
  }
  return y;
}

double SurvivalModel::integrated_hazard(double y) const {
  const double a = parts_.support.lower;
  const double b = parts_.support.upper;
  if (std::isnan(y)) raise(errc::invalid_argument, "integrated_hazard at NaN");
  if (parts_.censor_mass > 0.0 && std::isfinite(b)) {
    // A censored endpoint carries exact mass, so queries in the clamp window
    // answer with the stored value instead of a nearby interior evaluation.
    const double eps = kEndpointClamp * std::max(1.0, std::abs(b));
    if (y >= b - eps)
      return y <= b + eps ? -std::log(parts_.censor_mass) : kInf;
  }
  const double yc = clamp_interior(y);
  if (yc <= a) return 0.0;
  if (yc >= b) {
    if (parts_.censor_mass > 0.0) return -std::log(parts_.censor_mass);
    return kInf;
  }
  return parts_.integrated_hazard(yc);
}

double SurvivalModel::survival(double y) const {
  const double a = parts_.support.lower;
  const double b = parts_.support.upper;
  if (std::isnan(y)) raise(errc::invalid_argument, "survival at NaN");
  if (parts_.censor_mass > 0.0 && std::isfinite(b)) {
    const double eps = kEndpointClamp * std::max(1.0, std::abs(b));
    if (y >= b - eps) return y <= b + eps ? parts_.censor_mass : 0.0;
  }
  const double yc = clamp_interior(y);
  if (yc <= a) return 1.0;
  if (yc >= b) {
    if (parts_.censor_mass > 0.0) return parts_.censor_mass;
    return 0.0;
  }
  return parts_.survival(yc);
}

double SurvivalModel::hazard(double y) const {
  const double a = parts_.support.lower;
  const double b = parts_.support.upper;
  if (std::isnan(y)) raise(errc::invalid_argument, "hazard at NaN");
  const double yc = clamp_interior(y);
  if (yc <= a) return 0.0;
  if (yc >= b) return kInf;
  return parts_.hazard(yc);
}

double SurvivalModel::hazard_derivative(double y) const {
  const double yc = clamp_interior(y);
  XDM_REQUIRE(parts_.support.contains(yc), errc::out_of_support,
              "hazard derivative outside the open support");
  return parts_.hazard_derivative(yc);
}

double SurvivalModel::hazard_inverse_closed(double mu) const {
  XDM_REQUIRE(has_hazard_inverse(), errc::numerical_error,
              "no closed-form hazard inverse stored");
  return parts_.hazard_inverse(mu);
}

double SurvivalModel::hazard_d2(double y) const {
  XDM_REQUIRE(has_hazard_d2(), errc::numerical_error, "no stored h''");
  return parts_.hazard_d2(clamp_interior(y));
}

double SurvivalModel::hazard_d3(double y) const {
  XDM_REQUIRE(has_hazard_d3(), errc::numerical_error, "no stored h'''");
  return parts_.hazard_d3(clamp_interior(y));
}

std::pair<double, double> rate_and_slope(const SurvivalModel& model) {
  XDM_REQUIRE(model.support().contains(0.0), errc::domain_error,
              "rate_and_slope requires 0 in the open support");
  return {model.hazard(0.0), model.hazard_derivative(0.0)};
}

double slope_via_varform(const SurvivalModel& model) {
  XDM_REQUIRE(model.support().contains(0.0), errc::domain_error,
              "varform slope requires 0 in the open support");
  const double h = num::kFdStep;
  XDM_REQUIRE(model.support().contains(-h) && model.support().contains(h),
              errc::numerical_error,
              "difference stencil leaves the support");
  auto g = [&model](double y) {
    const double f = model.hazard(y) * model.survival(y);
    XDM_REQUIRE(f > 0.0, errc::numerical_error, "density vanished in varform");
    return -std::log(f);
  };
  const double gprime = (g(h) - g(-h)) / (2.0 * h);
  const double mu = model.hazard(0.0);
  return mu * (mu - gprime);
}

Semiinvariants semiinvariants(const SurvivalModel& model, int order) {
  XDM_REQUIRE(order >= 1 && order <= 4, errc::unsupported_order,
              "semiinvariants supports orders 1..4");
  XDM_REQUIRE(model.support().contains(0.0), errc::domain_error,
              "semiinvariants require 0 in the open support");
  Semiinvariants out;
  out.order = order;
  out.values.push_back(model.hazard(0.0));
  if (order >= 2) out.values.push_back(model.hazard_derivative(0.0));
  if (order >= 3) {
    if (model.has_hazard_d2()) {
      out.values.push_back(model.hazard_d2(0.0));
    } else {
      auto hp = [&model](double y) { return model.hazard_derivative(y); };
      out.values.push_back(num::central_derivative(hp, 0.0));
    }
  }
  if (order >= 4) {
    if (model.has_hazard_d3()) {
      out.values.push_back(model.hazard_d3(0.0));
    } else {
      auto hp = [&model](double y) { return model.hazard_derivative(y); };
      out.values.push_back(num::second_derivative(hp, 0.0));
    }
  }
  return out;
}

MonotoneClass classify_monotone(const SurvivalModel& model, int grid) {
  const Interval window = probe_window(model.support());
  bool up = false, down = false;
  for (int i = 0; i < grid; ++i) {
    const double t = (i + 0.5) / grid;
    const double y = window.lower + t * (window.upper - window.lower);
    if (!model.support().contains(y)) continue;
    const double d = model.hazard_derivative(y);
    if (d > 0.0) up = true;
    if (d < 0.0) down = true;
  }
  if (up && !down) return MonotoneClass::Ifr;
  if (down && !up) return MonotoneClass::Dfr;
  return MonotoneClass::None;
}

SurvivalModel min_of(const std::vector<SurvivalModel>& models) {
  XDM_REQUIRE(!models.empty(), errc::invalid_argument, "min_of needs a model");
  double lo = -kInf, hi = kInf;      // open intersection
  double a = kInf, b = kInf;         // resulting support endpoints
  for (const auto& m : models) {
    lo = std::max(lo, m.support().lower);
    hi = std::min(hi, m.support().upper);
    a = std::min(a, m.support().lower);
    b = std::min(b, m.support().upper);
  }
  XDM_REQUIRE(lo < hi, errc::empty_support,
              "min_of requires supports overlapping in an open interval");

  auto shared = std::make_shared<const std::vector<SurvivalModel>>(models);
  SurvivalModelParts parts;
  parts.support = Interval(a, b);
  parts.integrated_hazard = [shared](double y) {
    double s = 0.0;
    for (const auto& m : *shared) s += m.integrated_hazard(y);
    return s;
  };
  parts.survival = [shared](double y) {
    double s = 1.0;
    for (const auto& m : *shared) s *= m.survival(y);
    return s;
  };
  parts.hazard = [shared](double y) {
    double s = 0.0;
    for (const auto& m : *shared) s += m.hazard(y);
    return s;
  };
  parts.hazard_derivative = [shared](double y) {
    double s = 0.0;
    for (const auto& m : *shared) {
      if (m.support().contains(y)) s += m.hazard_derivative(y);
    }
    return s;
  };
  bool with_d2 = true, with_d3 = true;
  for (const auto& m : models) {
    with_d2 = with_d2 && m.has_hazard_d2();
    with_d3 = with_d3 && m.has_hazard_d3();
  }
  if (with_d2) {
    parts.hazard_d2 = [shared](double y) {
      double s = 0.0;
      for (const auto& m : *shared)
        if (m.support().contains(y)) s += m.hazard_d2(y);
      return s;
    };
  }
  if (with_d3) {
    parts.hazard_d3 = [shared](double y) {
      double s = 0.0;
      for (const auto& m : *shared)
        if (m.support().contains(y)) s += m.hazard_d3(y);
      return s;
    };
  }
  double censor = 1.0;
  for (const auto& m : models) {
    // At the shared endpoint a component contributes its censor mass if its
    // own support ends there, its interior survival value otherwise.
    censor *= (m.support().upper == b) ? m.censor_mass() : m.survival(b);
  }
  parts.censor_mass = censor;

  SurvivalModel probe(parts);
  parts.monotone_class = classify_monotone(probe);
  return SurvivalModel(std::move(parts));
}

SurvivalModel scale_model(const SurvivalModel& model, double c) {
  XDM_REQUIRE(std::isfinite(c) && c > 0.0, errc::invalid_scale,
              "scale factor must be positive and finite");
  auto base = std::make_shared<const SurvivalModel>(model);
  SurvivalModelParts parts;
  parts.support = Interval(c * model.support().lower, c * model.support().upper);
  parts.integrated_hazard = [base, c](double y) {
    return base->integrated_hazard(y / c);
  };
  parts.survival = [base, c](double y) { return base->survival(y / c); };
  parts.hazard = [base, c](double y) { return base->hazard(y / c) / c; };
  parts.hazard_derivative = [base, c](double y) {
    return base->hazard_derivative(y / c) / (c * c);
  };
  if (model.has_hazard_inverse()) {
    parts.hazard_inverse = [base, c](double mu) {
      return c * base->hazard_inverse_closed(c * mu);
    };
  }
  if (model.has_hazard_d2()) {
    parts.hazard_d2 = [base, c](double y) {
      return base->hazard_d2(y / c) / (c * c * c);
    };
  }
  if (model.has_hazard_d3()) {
    parts.hazard_d3 = [base, c](double y) {
      return base->hazard_d3(y / c) / (c * c * c * c);
    };
  }
  parts.censor_mass = model.censor_mass();
  parts.monotone_class = model.monotone_class();
  if (model.stored_rate_domain()) {
    parts.rate_domain =
        Interval(model.stored_rate_domain()->lower / c,
                 model.stored_rate_domain()->upper / c);
  }
  if (model.has_slope()) {
    RealFn v = model.stored_slope();
    parts.slope = [v, c](double mu) { return v(c * mu) / (c * c); };
  }
  return SurvivalModel(std::move(parts));
}

namespace {

double quantile_from_survival(const SurvivalModel& model, double u) {
  // Solve H(y) = -log(u) on the open support; H is strictly increasing.
  const double target = -std::log(u);
  auto H = [&model](double y) { return model.integrated_hazard(y); };
  auto h = [&model](double y) { return model.hazard(y); };
  const double anchor = model.support().anchor();
  num::Bracket br =
      num::bracket_monotone(H, target, model.support(), anchor, true);
  if (br.lo == br.hi) return br.lo;
  num::Fn f = [&](double y) { return H(y) - target; };
  num::Fn df = h;
  return num::find_root(f, br.lo, br.hi, br.flo, br.fhi, &df);
}

}  // namespace

Eigen::ArrayXd sample(const SurvivalModel& model, long n, std::uint64_t seed) {
  XDM_REQUIRE(n >= 0, errc::invalid_argument, "sample size must be nonnegative");
  num::UniformStream stream(seed);
  Eigen::ArrayXd out(n);
  const double censor = model.censor_mass();
  const double b = model.support().upper;
  for (long i = 0; i < n; ++i) {
    const double u = stream.next_open01();
    if (u <= censor) {
      out[i] = std::isfinite(b) ? b : kInf;
      continue;
    }
    out[i] = quantile_from_survival(model, u);
  }
  return out;
}

double survival_sup_distance(const SurvivalModel& a, const SurvivalModel& b,
                             const Interval& window, int grid) {
  XDM_REQUIRE(window.bounded(), errc::window_out_of_domain,
              "survival distance window must be bounded");
  const Eigen::ArrayXd ys =
      Eigen::ArrayXd::LinSpaced(grid, window.lower, window.upper);
  Eigen::ArrayXd da(grid), db(grid);
  for (int i = 0; i < grid; ++i) {
    da[i] = a.survival(ys[i]);
    db[i] = b.survival(ys[i]);
  }
  return (da - db).abs().maxCoeff();
}

}  // namespace xdm
