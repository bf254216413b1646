#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "xdm/catalog.hpp"
#include "xdm/convergence.hpp"
#include "xdm/error.hpp"
#include "xdm/slope.hpp"

namespace {

template <class F>
xdm::errc code_of(F&& f) {
  try {
    f();
  } catch (const xdm::error& e) {
    return e.code();
  }
  return static_cast<xdm::errc>(-1);
}

}  // namespace

TEST_CASE("default evaluation window hugs the support") {
  const auto half = xdm::default_window(xdm::Interval(0.0, xdm::kInf));
  CHECK(half.lower == doctest::Approx(1e-3));
  CHECK(half.upper == doctest::Approx(3.0));
  const auto line = xdm::default_window(xdm::Interval(-xdm::kInf, xdm::kInf));
  CHECK(line.lower == doctest::Approx(-3.0));
  CHECK(line.upper == doctest::Approx(3.0));
  const auto unit = xdm::default_window(xdm::Interval(0.0, 1.0));
  CHECK(unit.lower == doctest::Approx(1e-3));
  CHECK(unit.upper == doctest::Approx(1.0 - 1e-3));
}

TEST_CASE("slope distances on a window") {
  const auto one = xdm::make_quadratic_family("rayleigh").slope_closed_form;
  const auto id = xdm::make_quadratic_family("gumbel").slope_closed_form;
  CHECK(xdm::slope_sequence_distance(one, one, xdm::Interval(0.5, 2.0)) == 0.0);
  const double d = xdm::slope_sequence_distance(one, id, xdm::Interval(0.5, 2.0));
  CHECK(d == doctest::Approx(1.0).epsilon(5e-3));
  const auto pareto = xdm::make_quadratic_family("pareto").slope_closed_form;
  CHECK(code_of([&] {
          xdm::slope_sequence_distance(one, pareto, xdm::Interval(0.5, 2.0));
        }) == xdm::errc::window_out_of_domain);
}

TEST_CASE("tightness integrals with closed values") {
  const auto one = xdm::make_quadratic_family("rayleigh").slope_closed_form;
  CHECK(xdm::tightness_integral(one, 1.0, xdm::Side::Left) ==
        doctest::Approx(0.5).epsilon(1e-8));
  CHECK(xdm::tightness_integral(one, 1.0, xdm::Side::Right) == xdm::kInf);

  const auto falling = xdm::make_slope([](double mu) { return -std::exp(mu); },
                                       xdm::Interval(0.0, xdm::kInf));
  CHECK(xdm::tightness_integral(falling, 1.0, xdm::Side::Left) ==
        doctest::Approx(2.0 / std::exp(1.0)).epsilon(1e-8));
  CHECK(xdm::tightness_integral(falling, 1.0, xdm::Side::Right) ==
        doctest::Approx(1.0 - 2.0 / std::exp(1.0)).epsilon(1e-8));

  CHECK(code_of([&] { xdm::tightness_integral(one, -1.0, xdm::Side::Left); }) ==
        xdm::errc::invalid_argument);
}

TEST_CASE("an extreme value generator is its own limit") {
  const auto gen = xdm::make_gev(-0.5, 1.0, 1.0).model;
  xdm::GevOptions options;
  options.n_values = {2, 4};
  const auto report = xdm::gev_convergence_experiment(gen, 1.0, 1.0, options);
  CHECK(report.limit_family == "ev_-0.5");
  CHECK(report.passed);
  for (const auto& step : report.steps) {
    CHECK(step.slope_sup_distance < 1e-9);
    CHECK(step.survival_sup_distance < 1e-9);
    CHECK(step.tightness_integral <= report.tightness_bound);
  }
}

TEST_CASE("negative pareto minima approach the unit-index limit") {
  const auto gen = xdm::make_example_family("negative_pareto").model;
  xdm::GevOptions options;
  options.n_values = {100, 10000};
  options.p = 1.5;
  options.window = xdm::Interval(0.1, 1.0);
  const auto report = xdm::gev_convergence_experiment(gen, 1.0, 1.0, options);
  CHECK(report.limit_family == "ev_1");
  CHECK(report.passed);
  REQUIRE(report.steps.size() == 2);
  CHECK(report.steps[1].survival_sup_distance <
        report.steps[0].survival_sup_distance);
  CHECK(report.steps[1].survival_sup_distance < 0.05);

  // The power index is estimated from the slope tail when not supplied, so
  // the shape label carries a fitted value close to one rather than exactly.
  xdm::GevOptions blind;
  blind.n_values = {10};
  const auto estimated = xdm::gev_convergence_experiment(gen, 1.0, 1.0, blind);
  CHECK(estimated.limit_family.substr(0, 4) == "ev_1");
}

TEST_CASE("experiment guards reject unusable inputs") {
  const auto uniform = xdm::make_quadratic_family("uniform").model;
  xdm::GevOptions options;
  options.n_values = {10};
  CHECK(code_of([&] {
          xdm::gev_convergence_experiment(uniform, 2.0, 1.0, options);
        }) == xdm::errc::exponential_domain);

  const auto negp = xdm::make_example_family("negative_pareto").model;
  xdm::GevOptions wrong;
  wrong.n_values = {10};
  wrong.p = 3.0;
  CHECK(code_of([&] {
          xdm::gev_convergence_experiment(negp, 1.0, 1.0, wrong);
        }) == xdm::errc::no_power_asymptotics);

  const auto logistic = xdm::make_quadratic_family("logistic").model;
  xdm::ExpSlopeOptions exp_options;
  exp_options.m_values = {1.0};
  CHECK(code_of([&] {
          xdm::exp_slope_convergence_experiment(logistic, 0.5, 1.0, 1.0,
                                                exp_options);
        }) == xdm::errc::domain_not_full);

  const auto rayleigh = xdm::make_quadratic_family("rayleigh").model;
  CHECK(code_of([&] {
          xdm::exp_slope_convergence_experiment(rayleigh, 1.0, 1.0, 1.0,
                                                exp_options);
        }) == xdm::errc::no_exponential_asymptotics);
}

TEST_CASE("flat slopes are fixed under the zero-rate shift") {
  const auto rayleigh = xdm::make_quadratic_family("rayleigh").model;
  xdm::ExpSlopeOptions options;
  options.m_values = {1.0, 2.0};
  const auto report =
      xdm::exp_slope_convergence_experiment(rayleigh, 1.0, 1.0, 0.0, options);
  CHECK(report.limit_family == "exp_0");
  CHECK(report.passed);
  for (const auto& step : report.steps) {
    CHECK(step.slope_sup_distance < 1e-9);
    CHECK(step.survival_sup_distance < 1e-9);
  }
}

TEST_CASE("exponential slope families are fixed points") {
  const auto ifr = xdm::make_example_family("exp_slope_ifr").model;
  xdm::ExpSlopeOptions options;
  options.m_values = {1.0, 3.0};
  const auto report =
      xdm::exp_slope_convergence_experiment(ifr, 1.0, 1.0, -1.0, options);
  CHECK(report.limit_family == "exp_-1");
  CHECK(report.passed);
  for (const auto& step : report.steps)
    CHECK(step.slope_sup_distance < 1e-8);

  const auto dfr = xdm::make_example_family("exp_slope_dfr").model;
  const auto falling =
      xdm::exp_slope_convergence_experiment(dfr, 1.0, 1.0, 1.0, options);
  CHECK(falling.limit_family == "exp_1");
  CHECK(falling.passed);
  for (const auto& step : falling.steps)
    CHECK(step.slope_sup_distance < 1e-8);
}
