#pragma once

#include <Eigen/Core>

#include "xdm/hazard_location.hpp"
#include "xdm/interval.hpp"
#include "xdm/slope.hpp"
#include "xdm/survival_model.hpp"

namespace xdm {

// Extreme dispersion model XD(mu, lambda): the member survival is
// G^lambda(y/lambda + h^{-1}(mu)) for the generator survival G. The rate
// of the member is mu for every lambda; the member slope at 0 is
// unit_slope(mu)/lambda.
struct XDModel {
  SurvivalModel generator;
  double mu;
  double lambda;
  SlopeFunction unit_slope;
  SurvivalModel member;
};

XDModel xd_make(const SurvivalModel& generator, double mu, double lambda);

// XD(mu, n lambda); equals in law the scaled minimum n min(Y_1..Y_n) of n
// independent copies of the member.
XDModel scaled_min(const XDModel& xd, long long n);

// Law of Y - c given Y >= c for the member; approaches the exponential
// with rate mu as lambda grows.
SurvivalModel conditional_tail(const XDModel& xd, double c);

// G^n(y/sqrt n)/G^n(0) * exp(y mu sqrt n) on the grid; tends to
// exp(-slope * y^2 / 2) when the generator has positive slope at 0.
Eigen::ArrayXd rayleigh_limit_curve(const SurvivalModel& generator,
                                    long long n,
                                    const Eigen::ArrayXd& y_grid);

// Frailty bridge: a positive mixing variable with variance function V on
// the mean domain Omega induces a decreasing-hazard generator with hazard
// tau(-y), where tau inverts theta(mu) = int 1/V and theta(pin) = 0.
struct FrailtyLink {
  RealFn variance_function;
  Interval vf_domain;
  RealFn mean_mapping;
  Interval theta_domain;
  double pin;
};

FrailtyLink make_frailty_link(RealFn variance_function, Interval vf_domain,
                              std::optional<double> pin = {});

// The induced generator: support starts at 0, unit slope -V on
// (vf_domain.lower, pin), improper when the frailty carries mass at zero.
SurvivalModel frailty_generator(const FrailtyLink& link);

XDModel frailty_xd(const FrailtyLink& link, double mu, double lambda);

}  // namespace xdm
