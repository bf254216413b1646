#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xdm/slope.hpp"
#include "xdm/survival_model.hpp"

namespace xdm {

// A named model together with its analytic slope function.
struct FamilySpec {
  std::string name;
  std::map<std::string, double> parameters;
  SurvivalModel model;
  SlopeFunction slope_closed_form;
  std::string citation;
};

// Families with quadratic slope functions.
// name in {rayleigh, gumbel, uniform, pareto, logistic, neg_exponential,
// cosine}.
FamilySpec make_quadratic_family(const std::string& name);

// Vertical reflections of the quadratic families.
// name in {reflected_gumbel, reflected_logistic, reflected_neg_exponential}.
FamilySpec make_reflected_family(const std::string& name);

// Generalized extreme value model with rate mu and index lambda. The slope
// function is m^p / (lambda (2-p)) with p = (1+2 gamma)/(1+ gamma); gamma=0
// is the Gumbel branch. gamma=-1 (the exponential) is excluded.
FamilySpec make_gev(double gamma, double mu, double lambda);

double gev_power_index(double gamma);

// Worked examples. name in {negative_pareto, burr, gompertz_makeham,
// uniform_no_exp, exp_slope_ifr, exp_slope_dfr}; burr requires alpha,
// gompertz_makeham reads m from the same slot (beta fixed to 1).
FamilySpec make_example_family(const std::string& name,
                               std::optional<double> alpha = {});

// Gompertz-Makeham with hazard m + e^{beta y} on the positive half line.
FamilySpec make_gompertz_makeham(double m, double beta = 1.0);

// Name-based dispatch over the whole catalog; gev reads gamma, mu, lambda
// from params, burr reads alpha, gompertz_makeham reads m and beta.
FamilySpec make_family(const std::string& name,
                       const std::map<std::string, double>& params = {});

std::vector<std::string> catalog_names();

}  // namespace xdm
