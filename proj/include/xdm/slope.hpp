#pragma once

#include <string>

#include "xdm/hazard_location.hpp"
#include "xdm/interval.hpp"
#include "xdm/survival_model.hpp"

namespace xdm {

// Sign class of a slope function: positive slopes belong to increasing
// hazards, negative ones to decreasing hazards.
enum class SignClass { Positive, Negative };

std::string to_string(SignClass sign);

// v = h' o h^{-1} on the rate domain Psi of a monotone-hazard family.
// The domain lies in the positive half line and v keeps one sign on it.
struct SlopeFunction {
  RealFn v;
  Interval domain;
  SignClass sign_class;
};

// Validates the grid invariants (finite values, constant sign, domain in
// the positive half line) and infers the sign class.
SlopeFunction make_slope(RealFn v, Interval domain);

enum class SlopeVerdict { ValidProper, ValidRightCensored, Invalid };

std::string to_string(SlopeVerdict verdict);

// Endpoint diagnostics for a slope function. The left integral runs from
// the endpoint the hazard attains at the lower end of the support (the
// lower endpoint of the domain for positive slopes, the upper one for
// negative slopes); the right integral runs toward the other endpoint.
// A divergent integral is reported as +inf.
struct SlopeDiagnosis {
  double left_integral;
  double right_integral;
  SlopeVerdict verdict;
  bool continuity_at_a;
};

// Extracts the slope function of a family. With use_closed_inverse the
// generator's analytic hazard inverse is used when present; otherwise the
// hazard is inverted by monotone root finding.
SlopeFunction slope_function_of(const HazardLocationFamily& family,
                                bool use_closed_inverse = true);

// Signed integral of m/v(m) from mu_c to mu_d. Values equal to a domain
// endpoint are treated as improper limits. Equals the increment of the
// integrated hazard between the two hazard levels.
double hazard_interval_integral(const SlopeFunction& slope, double mu_c,
                                double mu_d);

SlopeDiagnosis validate_slope(const SlopeFunction& slope);

// Rebuilds the family a slope function came from, pinned so the hazard at
// the origin equals mu0. The integrated hazard, hazard, support and censor
// mass are all recovered from quadrature against v.
HazardLocationFamily reconstruct_from_slope(const SlopeFunction& slope,
                                            double mu0);

}  // namespace xdm
