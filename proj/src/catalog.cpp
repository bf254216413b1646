#include "xdm/catalog.hpp"

#include <cmath>
#include <utility>

#include "xdm/error.hpp"
#include "xdm/hazard_location.hpp"
#include "xdm/num/roots.hpp"

namespace xdm {
namespace {

FamilySpec assemble(std::string name, std::map<std::string, double> params,
                    SurvivalModelParts parts, RealFn v, Interval psi,
                    std::string citation) {
  SurvivalModel model(std::move(parts));
  SlopeFunction slope = make_slope(std::move(v), psi);
  return FamilySpec{std::move(name), std::move(params), std::move(model),
                    std::move(slope), std::move(citation)};
}

FamilySpec make_rayleigh() {
  SurvivalModelParts p;
  p.support = Interval(0.0, kInf);
  p.survival = [](double y) { return std::exp(-0.5 * y * y); };
  p.integrated_hazard = [](double y) { return 0.5 * y * y; };
  p.hazard = [](double y) { return y; };
  p.hazard_derivative = [](double) { return 1.0; };
  p.hazard_d2 = [](double) { return 0.0; };
  p.hazard_d3 = [](double) { return 0.0; };
  p.hazard_inverse = [](double mu) { return mu; };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(0.0, kInf);
  return assemble("rayleigh", {}, std::move(p), [](double) { return 1.0; },
                  Interval(0.0, kInf), "Rayleigh law, unit scale");
}

FamilySpec make_gumbel() {
  SurvivalModelParts p;
  p.support = Interval(-kInf, kInf);
  p.survival = [](double y) { return std::exp(-std::exp(y)); };
  p.integrated_hazard = [](double y) { return std::exp(y); };
  p.hazard = [](double y) { return std::exp(y); };
  p.hazard_derivative = [](double y) { return std::exp(y); };
  p.hazard_d2 = [](double y) { return std::exp(y); };
  p.hazard_d3 = [](double y) { return std::exp(y); };
  p.hazard_inverse = [](double mu) { return std::log(mu); };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(0.0, kInf);
  return assemble("gumbel", {}, std::move(p), [](double mu) { return mu; },
                  Interval(0.0, kInf),
                  "Gumbel law for minima, doubly exponential");
}

FamilySpec make_uniform() {
  SurvivalModelParts p;
  p.support = Interval(0.0, 1.0);
  p.survival = [](double y) { return 1.0 - y; };
  p.integrated_hazard = [](double y) { return -std::log1p(-y); };
  p.hazard = [](double y) { return 1.0 / (1.0 - y); };
  p.hazard_derivative = [](double y) {
    const double r = 1.0 - y;
    return 1.0 / (r * r);
  };
  p.hazard_d2 = [](double y) {
    const double r = 1.0 - y;
    return 2.0 / (r * r * r);
  };
  p.hazard_d3 = [](double y) {
    const double r = 1.0 - y;
    return 6.0 / (r * r * r * r);
  };
  p.hazard_inverse = [](double mu) { return 1.0 - 1.0 / mu; };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(1.0, kInf);
  return assemble("uniform", {}, std::move(p),
                  [](double mu) { return mu * mu; }, Interval(1.0, kInf),
                  "uniform law on the unit interval");
}

FamilySpec make_pareto() {
  SurvivalModelParts p;
  p.support = Interval(1.0, kInf);
  p.survival = [](double y) { return 1.0 / y; };
  p.integrated_hazard = [](double y) { return std::log(y); };
  p.hazard = [](double y) { return 1.0 / y; };
  p.hazard_derivative = [](double y) { return -1.0 / (y * y); };
  p.hazard_d2 = [](double y) { return 2.0 / (y * y * y); };
  p.hazard_d3 = [](double y) { return -6.0 / (y * y * y * y); };
  p.hazard_inverse = [](double mu) { return 1.0 / mu; };
  p.monotone_class = MonotoneClass::Dfr;
  p.rate_domain = Interval(0.0, 1.0);
  return assemble("pareto", {}, std::move(p),
                  [](double mu) { return -mu * mu; }, Interval(0.0, 1.0),
                  "Pareto law with unit index");
}

double sigmoid(double y) {
  if (y >= 0.0) return 1.0 / (1.0 + std::exp(-y));
  const double e = std::exp(y);
  return e / (1.0 + e);
}

FamilySpec make_logistic() {
  SurvivalModelParts p;
  p.support = Interval(-kInf, kInf);
  p.survival = [](double y) { return 1.0 - sigmoid(y); };
  p.integrated_hazard = [](double y) {
    return y > 30.0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y));
  };
  p.hazard = [](double y) { return sigmoid(y); };
  p.hazard_derivative = [](double y) {
    const double s = sigmoid(y);
    return s * (1.0 - s);
  };
  p.hazard_d2 = [](double y) {
    const double s = sigmoid(y);
    return s * (1.0 - s) * (1.0 - 2.0 * s);
  };
  p.hazard_d3 = [](double y) {
    const double s = sigmoid(y);
    return s * (1.0 - s) * (1.0 - 6.0 * s + 6.0 * s * s);
  };
  p.hazard_inverse = [](double mu) { return std::log(mu / (1.0 - mu)); };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(0.0, 1.0);
  return assemble("logistic", {}, std::move(p),
                  [](double mu) { return mu * (1.0 - mu); },
                  Interval(0.0, 1.0), "standard logistic law");
}

FamilySpec make_neg_exponential() {
  SurvivalModelParts p;
  p.support = Interval(-kInf, 0.0);
  p.survival = [](double y) { return -std::expm1(y); };
  p.integrated_hazard = [](double y) { return -std::log(-std::expm1(y)); };
  p.hazard = [](double y) {
    const double u = std::exp(y);
    return u / (1.0 - u);
  };
  p.hazard_derivative = [](double y) {
    const double u = std::exp(y);
    const double r = 1.0 - u;
    return u / (r * r);
  };
  p.hazard_d2 = [](double y) {
    const double u = std::exp(y);
    const double r = 1.0 - u;
    return u * (1.0 + u) / (r * r * r);
  };
  p.hazard_d3 = [](double y) {
    const double u = std::exp(y);
    const double r = 1.0 - u;
    return u * (1.0 + u * (4.0 + u)) / (r * r * r * r);
  };
  p.hazard_inverse = [](double mu) { return std::log(mu / (1.0 + mu)); };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(0.0, kInf);
  return assemble("neg_exponential", {}, std::move(p),
                  [](double mu) { return mu * (1.0 + mu); },
                  Interval(0.0, kInf), "negated standard exponential law");
}

FamilySpec make_cosine() {
  SurvivalModelParts p;
  p.support = Interval(0.0, 1.5707963267948966);
  p.survival = [](double y) { return std::cos(y); };
  p.integrated_hazard = [](double y) { return -std::log(std::cos(y)); };
  p.hazard = [](double y) { return std::tan(y); };
  p.hazard_derivative = [](double y) {
    const double t = std::tan(y);
    return 1.0 + t * t;
  };
  p.hazard_d2 = [](double y) {
    const double t = std::tan(y);
    return 2.0 * t * (1.0 + t * t);
  };
  p.hazard_d3 = [](double y) {
    const double t = std::tan(y);
    return (2.0 + 6.0 * t * t) * (1.0 + t * t);
  };
  p.hazard_inverse = [](double mu) { return std::atan(mu); };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(0.0, kInf);
  return assemble("cosine", {}, std::move(p),
                  [](double mu) { return 1.0 + mu * mu; },
                  Interval(0.0, kInf), "cosine law on the quarter period");
}

FamilySpec make_reflected_gumbel() {
  SurvivalModelParts p;
  p.support = Interval(0.0, kInf);
  p.survival = [](double y) { return std::exp(1.0 - y - std::exp(-y)); };
  p.integrated_hazard = [](double y) { return y - 1.0 + std::exp(-y); };
  p.hazard = [](double y) { return -std::expm1(-y); };
  p.hazard_derivative = [](double y) { return std::exp(-y); };
  p.hazard_d2 = [](double y) { return -std::exp(-y); };
  p.hazard_d3 = [](double y) { return std::exp(-y); };
  p.hazard_inverse = [](double mu) { return -std::log1p(-mu); };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(0.0, 1.0);
  return assemble("reflected_gumbel", {}, std::move(p),
                  [](double mu) { return 1.0 - mu; }, Interval(0.0, 1.0),
                  "vertical reflection of the Gumbel law");
}

FamilySpec make_reflected_logistic() {
  SurvivalModelParts p;
  p.support = Interval(0.0, kInf);
  p.survival = [](double y) { return 1.0 / std::cosh(0.5 * y); };
  p.integrated_hazard = [](double y) {
    return y > 60.0 ? 0.5 * y - std::log(2.0)
                    : std::log(std::cosh(0.5 * y));
  };
  p.hazard = [](double y) { return 0.5 * std::tanh(0.5 * y); };
  p.hazard_derivative = [](double y) {
    const double h = 0.5 * std::tanh(0.5 * y);
    return 0.25 - h * h;
  };
  p.hazard_d2 = [](double y) {
    const double h = 0.5 * std::tanh(0.5 * y);
    return -2.0 * h * (0.25 - h * h);
  };
  p.hazard_d3 = [](double y) {
    const double h = 0.5 * std::tanh(0.5 * y);
    const double d1 = 0.25 - h * h;
    return -2.0 * d1 * d1 + 4.0 * h * h * d1;
  };
  p.hazard_inverse = [](double mu) { return 2.0 * std::atanh(2.0 * mu); };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(0.0, 0.5);
  return assemble("reflected_logistic", {}, std::move(p),
                  [](double mu) { return (0.5 - mu) * (0.5 + mu); },
                  Interval(0.0, 0.5),
                  "vertical reflection of the logistic law");
}

FamilySpec make_reflected_neg_exponential() {
  SurvivalModelParts p;
  p.support = Interval(std::log(2.0), kInf);
  p.survival = [](double y) {
    const double u = std::exp(-y);
    return 4.0 * u * (1.0 - u);
  };
  p.integrated_hazard = [](double y) {
    return y - std::log(4.0) - std::log1p(-std::exp(-y));
  };
  p.hazard = [](double y) {
    const double u = std::exp(-y);
    return (1.0 - 2.0 * u) / (1.0 - u);
  };
  p.hazard_derivative = [](double y) {
    const double u = std::exp(-y);
    const double r = 1.0 - u;
    return u / (r * r);
  };
  p.hazard_d2 = [](double y) {
    const double u = std::exp(-y);
    const double r = 1.0 - u;
    return -u * (1.0 + u) / (r * r * r);
  };
  p.hazard_d3 = [](double y) {
    const double u = std::exp(-y);
    const double r = 1.0 - u;
    return u * (1.0 + u * (4.0 + u)) / (r * r * r * r);
  };
  p.hazard_inverse = [](double mu) {
    return std::log((2.0 - mu) / (1.0 - mu));
  };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(0.0, 1.0);
  return assemble("reflected_neg_exponential", {}, std::move(p),
                  [](double mu) { return (mu - 1.0) * (mu - 2.0); },
                  Interval(0.0, 1.0),
                  "vertical reflection of the negated exponential law");
}

FamilySpec make_negative_pareto() {
  SurvivalModelParts p;
  p.support = Interval(-kInf, 0.0);
  p.survival = [](double y) { return y / (y - 1.0); };
  p.integrated_hazard = [](double y) { return std::log1p(-1.0 / y); };
  p.hazard = [](double y) { return 1.0 / (y * y - y); };
  p.hazard_derivative = [](double y) {
    const double q = y * y - y;
    return (1.0 - 2.0 * y) / (q * q);
  };
  p.hazard_d2 = [](double y) {
    const double q = y * y - y;
    return 2.0 * (3.0 * y * y - 3.0 * y + 1.0) / (q * q * q);
  };
  p.hazard_d3 = [](double y) {
    const double q = y * y - y;
    return 6.0 * (-4.0 * y * y * y + 6.0 * y * y - 4.0 * y + 1.0) /
           (q * q * q * q);
  };
  p.hazard_inverse = [](double mu) {
    return 0.5 * (1.0 - std::sqrt(1.0 + 4.0 / mu));
  };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(0.0, kInf);
  return assemble("negative_pareto", {}, std::move(p),
                  [](double mu) { return mu * std::sqrt(mu * mu + 4.0 * mu); },
                  Interval(0.0, kInf), "negated shifted Pareto law");
}

FamilySpec make_burr(double alpha) {
  XDM_REQUIRE(alpha > 0.0, errc::invalid_argument,
              "burr shape must be positive");
  SurvivalModelParts p;
  p.support = Interval(0.0, kInf);
  p.survival = [alpha](double y) {
    return 1.0 / (1.0 + std::pow(y, alpha));
  };
  p.integrated_hazard = [alpha](double y) {
    return std::log1p(std::pow(y, alpha));
  };
  auto hazard = [alpha](double y) {
    const double t = std::pow(y, alpha);
    return alpha * t / (y * (1.0 + t));
  };
  auto hazard_derivative = [alpha](double y) {
    const double t = std::pow(y, alpha);
    const double d = 1.0 + t;
    return alpha * t * ((alpha - 1.0) - t) / (y * y * d * d);
  };
  p.hazard = hazard;
  p.hazard_derivative = hazard_derivative;
  Interval psi(0.0, kInf);
  Interval branch = p.support;
  bool branch_increasing = false;
  if (alpha > 1.0) {
    p.monotone_class = MonotoneClass::None;
    const double peak_y = std::pow(alpha - 1.0, 1.0 / alpha);
    psi = Interval(0.0, hazard(peak_y));
    branch = Interval(0.0, peak_y);
    branch_increasing = true;
  } else {
    p.monotone_class = MonotoneClass::Dfr;
    psi = alpha == 1.0 ? Interval(0.0, 1.0) : Interval(0.0, kInf);
    p.rate_domain = psi;
  }
  if (alpha == 0.5) {
    p.hazard_inverse = [](double mu) {
      const double s = 0.5 * (std::sqrt(1.0 + 2.0 / mu) - 1.0);
      return s * s;
    };
  } else if (alpha == 1.0) {
    p.hazard_inverse = [](double mu) { return 1.0 / mu - 1.0; };
  }

  RealFn v;
  if (alpha == 0.5) {
    v = [](double mu) {
      return -mu * mu * (mu + 2.0 + std::sqrt(mu * mu + 2.0 * mu));
    };
  } else if (alpha == 1.0) {
    v = [](double mu) { return -mu * mu; };
  } else {
    v = [hazard, hazard_derivative, branch, branch_increasing](double mu) {
      num::Fn h = hazard;
      num::Bracket br = num::bracket_monotone(h, mu, branch, branch.anchor(),
                                              branch_increasing);
      if (br.lo == br.hi) return hazard_derivative(br.lo);
      num::Fn g = [&](double y) { return hazard(y) - mu; };
      num::Fn dg = hazard_derivative;
      return hazard_derivative(num::find_root(g, br.lo, br.hi, br.flo,
                                              br.fhi, &dg));
    };
  }
  return assemble("burr", {{"alpha", alpha}}, std::move(p), std::move(v), psi,
                  "Burr law, unit scale");
}

FamilySpec make_uniform_no_exp() {
  SurvivalModelParts p;
  p.support = Interval(0.0, 1.0);
  p.survival = [](double y) { return std::exp(y) * (1.0 - y); };
  p.integrated_hazard = [](double y) { return -y - std::log1p(-y); };
  p.hazard = [](double y) { return y / (1.0 - y); };
  p.hazard_derivative = [](double y) {
    const double r = 1.0 - y;
    return 1.0 / (r * r);
  };
  p.hazard_d2 = [](double y) {
    const double r = 1.0 - y;
    return 2.0 / (r * r * r);
  };
  p.hazard_d3 = [](double y) {
    const double r = 1.0 - y;
    return 6.0 / (r * r * r * r);
  };
  p.hazard_inverse = [](double mu) { return mu / (1.0 + mu); };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(0.0, kInf);
  return assemble("uniform_no_exp", {}, std::move(p),
                  [](double mu) {
                    const double r = 1.0 + mu;
                    return r * r;
                  },
                  Interval(0.0, kInf),
                  "uniform law with its exponential component removed");
}

FamilySpec make_exp_slope_ifr() {
  SurvivalModelParts p;
  p.support = Interval(0.0, kInf);
  p.survival = [](double y) {
    return std::exp(y - (1.0 + y) * std::log1p(y));
  };
  p.integrated_hazard = [](double y) {
    return -y + (1.0 + y) * std::log1p(y);
  };
  p.hazard = [](double y) { return std::log1p(y); };
  p.hazard_derivative = [](double y) { return 1.0 / (1.0 + y); };
  p.hazard_d2 = [](double y) {
    const double r = 1.0 + y;
    return -1.0 / (r * r);
  };
  p.hazard_d3 = [](double y) {
    const double r = 1.0 + y;
    return 2.0 / (r * r * r);
  };
  p.hazard_inverse = [](double mu) { return std::expm1(mu); };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(0.0, kInf);
  return assemble("exp_slope_ifr", {}, std::move(p),
                  [](double mu) { return std::exp(-mu); },
                  Interval(0.0, kInf),
                  "law with decaying exponential slope function");
}

FamilySpec make_exp_slope_dfr() {
  SurvivalModelParts p;
  p.support = Interval(0.0, 1.0);
  p.survival = [](double y) { return std::exp(-y + y * std::log(y)); };
  p.integrated_hazard = [](double y) { return y - y * std::log(y); };
  p.hazard = [](double y) { return -std::log(y); };
  p.hazard_derivative = [](double y) { return -1.0 / y; };
  p.hazard_d2 = [](double y) { return 1.0 / (y * y); };
  p.hazard_d3 = [](double y) { return -2.0 / (y * y * y); };
  p.hazard_inverse = [](double mu) { return std::exp(-mu); };
  p.censor_mass = std::exp(-1.0);
  p.monotone_class = MonotoneClass::Dfr;
  p.rate_domain = Interval(0.0, kInf);
  return assemble("exp_slope_dfr", {}, std::move(p),
                  [](double mu) { return -std::exp(mu); },
                  Interval(0.0, kInf),
                  "right censored law with growing exponential slope function");
}

}  // namespace

FamilySpec make_quadratic_family(const std::string& name) {
  if (name == "rayleigh") return make_rayleigh();
  if (name == "gumbel") return make_gumbel();
  if (name == "uniform") return make_uniform();
  if (name == "pareto") return make_pareto();
  if (name == "logistic") return make_logistic();
  if (name == "neg_exponential") return make_neg_exponential();
  if (name == "cosine") return make_cosine();
  raise(errc::unknown_family, "unknown quadratic slope family: " + name);
}

FamilySpec make_reflected_family(const std::string& name) {
  if (name == "reflected_gumbel") return make_reflected_gumbel();
  if (name == "reflected_logistic") return make_reflected_logistic();
  if (name == "reflected_neg_exponential")
    return make_reflected_neg_exponential();
  raise(errc::unknown_family, "unknown reflected family: " + name);
}

double gev_power_index(double gamma) {
  XDM_REQUIRE(std::abs(1.0 + gamma) >= 1e-12, errc::exponential_case,
              "the exponential case has no power index");
  return (1.0 + 2.0 * gamma) / (1.0 + gamma);
}

FamilySpec make_gev(double gamma, double mu, double lambda) {
  XDM_REQUIRE(mu > 0.0 && lambda > 0.0, errc::invalid_argument,
              "gev requires positive rate and index");
  XDM_REQUIRE(std::abs(1.0 + gamma) >= 1e-12, errc::exponential_case,
              "the exponential case is excluded from the gev family");
  std::map<std::string, double> params{
      {"gamma", gamma}, {"mu", mu}, {"lambda", lambda}};

  SurvivalModelParts p;
  RealFn v;
  if (std::abs(gamma) < 1e-8) {
    p.support = Interval(-kInf, kInf);
    p.integrated_hazard = [mu, lambda](double y) {
      return lambda * mu * std::exp(y / lambda);
    };
    p.survival = [mu, lambda](double y) {
      return std::exp(-lambda * mu * std::exp(y / lambda));
    };
    p.hazard = [mu, lambda](double y) { return mu * std::exp(y / lambda); };
    p.hazard_derivative = [mu, lambda](double y) {
      return mu * std::exp(y / lambda) / lambda;
    };
    p.hazard_d2 = [mu, lambda](double y) {
      return mu * std::exp(y / lambda) / (lambda * lambda);
    };
    p.hazard_d3 = [mu, lambda](double y) {
      return mu * std::exp(y / lambda) / (lambda * lambda * lambda);
    };
    p.hazard_inverse = [mu, lambda](double m) {
      return lambda * std::log(m / mu);
    };
    p.monotone_class = MonotoneClass::Ifr;
    v = [lambda](double m) { return m / lambda; };
  } else {
    const double T = std::pow(mu, -gamma / (1.0 + gamma));
    const double edge = lambda * T / gamma;
    p.support = gamma > 0.0 ? Interval(-kInf, edge) : Interval(edge, kInf);
    auto base = [T, gamma, lambda](double y) { return T - gamma * y / lambda; };
    p.integrated_hazard = [base, gamma, lambda](double y) {
      return lambda * std::pow(base(y), -1.0 / gamma);
    };
    p.hazard = [base, gamma](double y) {
      return std::pow(base(y), -(1.0 + gamma) / gamma);
    };
    p.hazard_derivative = [base, gamma, lambda](double y) {
      return (1.0 + gamma) / lambda *
             std::pow(base(y), -(1.0 + 2.0 * gamma) / gamma);
    };
    p.hazard_d2 = [base, gamma, lambda](double y) {
      return (1.0 + gamma) * (1.0 + 2.0 * gamma) / (lambda * lambda) *
             std::pow(base(y), -(1.0 + 3.0 * gamma) / gamma);
    };
    p.hazard_d3 = [base, gamma, lambda](double y) {
      return (1.0 + gamma) * (1.0 + 2.0 * gamma) * (1.0 + 3.0 * gamma) /
             (lambda * lambda * lambda) *
             std::pow(base(y), -(1.0 + 4.0 * gamma) / gamma);
    };
    p.hazard_inverse = [T, gamma, lambda](double m) {
      return lambda * (T - std::pow(m, -gamma / (1.0 + gamma))) / gamma;
    };
    p.monotone_class =
        gamma > -1.0 ? MonotoneClass::Ifr : MonotoneClass::Dfr;
    const double px = gev_power_index(gamma);
    v = [px, gamma, lambda](double m) {
      return (1.0 + gamma) * std::pow(m, px) / lambda;
    };
  }
  p.rate_domain = Interval(0.0, kInf);
  return assemble("gev", std::move(params), std::move(p), std::move(v),
                  Interval(0.0, kInf),
                  "generalized extreme value law for minima");
}

FamilySpec make_gompertz_makeham(double m, double beta) {
  XDM_REQUIRE(m > 0.0, errc::invalid_argument,
              "gompertz_makeham requires m > 0");
  XDM_REQUIRE(beta > 0.0, errc::invalid_argument,
              "gompertz_makeham requires beta > 0; negative beta arises by "
              "horizontal reflection");
  SurvivalModelParts p;
  p.support = Interval(0.0, kInf);
  p.integrated_hazard = [m, beta](double y) {
    return m * y + std::expm1(beta * y) / beta;
  };
  p.hazard = [m, beta](double y) { return m + std::exp(beta * y); };
  p.hazard_derivative = [beta](double y) {
    return beta * std::exp(beta * y);
  };
  p.hazard_d2 = [beta](double y) {
    return beta * beta * std::exp(beta * y);
  };
  p.hazard_d3 = [beta](double y) {
    return beta * beta * beta * std::exp(beta * y);
  };
  p.hazard_inverse = [m, beta](double mu) {
    return std::log(mu - m) / beta;
  };
  p.monotone_class = MonotoneClass::Ifr;
  p.rate_domain = Interval(m + 1.0, kInf);
  return assemble("gompertz_makeham", {{"m", m}, {"beta", beta}},
                  std::move(p),
                  [m, beta](double mu) { return beta * (mu - m); },
                  Interval(m + 1.0, kInf), "Gompertz-Makeham law");
}

FamilySpec make_example_family(const std::string& name,
                               std::optional<double> alpha) {
  if (name == "negative_pareto") return make_negative_pareto();
  if (name == "burr") {
    XDM_REQUIRE(alpha.has_value(), errc::missing_parameter,
                "burr requires the shape alpha");
    return make_burr(*alpha);
  }
  if (name == "gompertz_makeham") {
    XDM_REQUIRE(alpha.has_value(), errc::missing_parameter,
                "gompertz_makeham requires the level m");
    return make_gompertz_makeham(*alpha);
  }
  if (name == "uniform_no_exp") return make_uniform_no_exp();
  if (name == "exp_slope_ifr") return make_exp_slope_ifr();
  if (name == "exp_slope_dfr") return make_exp_slope_dfr();
  raise(errc::unknown_family, "unknown example family: " + name);
}

FamilySpec make_family(const std::string& name,
                       const std::map<std::string, double>& params) {
  auto get = [&params](const char* key) -> std::optional<double> {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    return it->second;
  };
  auto require = [&get, &name](const char* key) {
    std::optional<double> val = get(key);
    XDM_REQUIRE(val.has_value(), errc::missing_parameter,
                name + " requires parameter " + key);
    return *val;
  };
  auto reject_unknown = [&params, &name](std::initializer_list<const char*>
                                             known) {
    for (const auto& kv : params) {
      bool ok = false;
      for (const char* k : known)
        if (kv.first == k) ok = true;
      XDM_REQUIRE(ok, errc::invalid_argument,
                  "unknown parameter " + kv.first + " for " + name);
    }
  };

  if (name == "gev") {
    reject_unknown({"gamma", "mu", "lambda"});
    return make_gev(require("gamma"), require("mu"), require("lambda"));
  }
  if (name == "burr") {
    reject_unknown({"alpha"});
    return make_example_family("burr", require("alpha"));
  }
  if (name == "gompertz_makeham") {
    reject_unknown({"m", "beta"});
    const double beta = get("beta").value_or(1.0);
    return make_gompertz_makeham(require("m"), beta);
  }
  reject_unknown({});
  for (const char* quad : {"rayleigh", "gumbel", "uniform", "pareto",
                           "logistic", "neg_exponential", "cosine"})
    if (name == quad) return make_quadratic_family(name);
  for (const char* refl : {"reflected_gumbel", "reflected_logistic",
                           "reflected_neg_exponential"})
    if (name == refl) return make_reflected_family(name);
  for (const char* ex : {"negative_pareto", "uniform_no_exp", "exp_slope_ifr",
                         "exp_slope_dfr"})
    if (name == ex) return make_example_family(name);
  raise(errc::unknown_family, "unknown family: " + name);
}

std::vector<std::string> catalog_names() {
  return {"rayleigh",
          "gumbel",
          "uniform",
          "pareto",
          "logistic",
          "neg_exponential",
          "cosine",
          "reflected_gumbel",
          "reflected_logistic",
          "reflected_neg_exponential",
          "gev",
          "negative_pareto",
          "burr",
          "gompertz_makeham",
          "uniform_no_exp",
          "exp_slope_ifr",
          "exp_slope_dfr"};
}

}  // namespace xdm
