#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "xdm/catalog.hpp"
#include "xdm/error.hpp"
#include "xdm/transforms.hpp"
#include "xdm/xd.hpp"

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

xdm::SurvivalModel exponential_model(double rate) {
  xdm::SurvivalModelParts parts;
  parts.support = xdm::Interval(0.0, xdm::kInf);
  parts.integrated_hazard = [rate](double y) { return rate * y; };
  parts.hazard = [rate](double) { return rate; };
  parts.hazard_derivative = [](double) { return 0.0; };
  parts.monotone_class = xdm::MonotoneClass::Ifr;
  return xdm::SurvivalModel(std::move(parts));
}

}  // namespace

TEST_CASE("dispersion members keep the rate and scale the slope") {
  const auto gumbel = xdm::make_quadratic_family("gumbel").model;
  const auto xd = xdm::xd_make(gumbel, 2.0, 3.0);
  CHECK(xd.member.hazard(0.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(xd.member.support().lower == -xdm::kInf);
  // Member survival is G^lambda(y/lambda + x0) with x0 = log mu.
  for (const double y : {-1.0, 0.0, 2.0}) {
    const double base = gumbel.survival(y / 3.0 + std::log(2.0));
    CHECK(xd.member.survival(y) ==
          doctest::Approx(std::pow(base, 3.0)).epsilon(1e-12));
  }
  const auto member_slope =
      xdm::slope_function_of(xdm::hl_family(xd.member));
  for (const double mu : oracle::midpoints(0.5, 4.0, 9))
    CHECK(member_slope.v(mu) ==
          doctest::Approx(xd.unit_slope.v(mu) / 3.0).epsilon(1e-8));
}

TEST_CASE("dispersion powers the censor mass") {
  const auto dfr = xdm::make_example_family("exp_slope_dfr").model;
  const auto xd = xdm::xd_make(dfr, 1.0, 2.0);
  CHECK(xd.member.censor_mass() ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  CHECK(xd.member.is_proper());
  CHECK(xd.member.support().upper ==
        doctest::Approx(2.0 * (1.0 - std::exp(-1.0))).epsilon(1e-12));
}

TEST_CASE("dispersion model construction guards its arguments") {
  const auto uniform = xdm::make_quadratic_family("uniform").model;
  CHECK(code_of([&] { xdm::xd_make(uniform, 0.5, 1.0); }) ==
        xdm::errc::rate_out_of_domain);
  const auto gumbel = xdm::make_quadratic_family("gumbel").model;
  CHECK(code_of([&] { xdm::xd_make(gumbel, 1.0, 0.0); }) ==
        xdm::errc::invalid_argument);
  CHECK(code_of([&] { xdm::xd_make(gumbel, 1.0, -2.0); }) ==
        xdm::errc::invalid_argument);
}

TEST_CASE("scaled minima stay in the dispersion family") {
  const auto logistic = xdm::make_quadratic_family("logistic").model;
  const auto xd = xdm::xd_make(logistic, 0.5, 1.0);
  const auto five = xdm::scaled_min(xd, 5);
  CHECK(five.lambda == doctest::Approx(5.0));
  CHECK(five.mu == doctest::Approx(0.5));

  // Against the direct construction: scale the minimum of five copies by 5.
  const auto direct = xdm::scale_model(
      xdm::min_of({xd.member, xd.member, xd.member, xd.member, xd.member}), 5.0);
  for (const double y : oracle::midpoints(-3.0, 3.0, 21))
    CHECK(five.member.survival(y) ==
          doctest::Approx(direct.survival(y)).epsilon(1e-12));
}

TEST_CASE("scaled minima match simulation") {
  const auto gumbel = xdm::make_quadratic_family("gumbel").model;
  const auto xd = xdm::xd_make(gumbel, 1.0, 1.0);
  const auto five = xdm::scaled_min(xd, 5);
  const int n = 20000;
  std::vector<double> mins(n);
  std::vector<Eigen::ArrayXd> draws;
  for (int k = 0; k < 5; ++k)
    draws.push_back(xdm::sample(xd.member, n, 1000 + k));
  for (int i = 0; i < n; ++i) {
    double m = draws[0][i];
    for (int k = 1; k < 5; ++k) m = std::min(m, draws[k][i]);
    mins[i] = 5.0 * m;
  }
  const double ks = oracle::ks_statistic(
      mins, [&](double y) { return 1.0 - five.member.survival(y); });
  CHECK(ks < 1.36 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("conditional tails approach the exponential") {
  const auto gumbel = xdm::make_quadratic_family("gumbel").model;
  const auto expo = exponential_model(1.0);
  double prev = xdm::kInf;
  for (const double lambda : {1.0, 10.0, 100.0}) {
    const auto xd = xdm::xd_make(gumbel, 1.0, lambda);
    const auto tail = xdm::conditional_tail(xd, 0.5);
    CHECK(tail.support().lower == 0.0);
    const double d =
        xdm::survival_sup_distance(tail, expo, xdm::Interval(1e-6, 3.0));
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 5e-3);
}

TEST_CASE("rayleigh limit curve of the logistic generator") {
  const auto logistic = xdm::make_quadratic_family("logistic").model;
  Eigen::ArrayXd grid(21);
  for (int i = 0; i < 21; ++i) grid[i] = 0.1 * i;
  const auto curve = xdm::rayleigh_limit_curve(logistic, 1000, grid);
  double worst = 0.0;
  for (int i = 0; i < 21; ++i) {
    const double limit = std::exp(-grid[i] * grid[i] / 8.0);
    worst = std::max(worst, std::abs(curve[i] - limit));
  }
  CHECK(worst < 2e-2);
  const auto closer = xdm::rayleigh_limit_curve(logistic, 100000, grid);
  double worst2 = 0.0;
  for (int i = 0; i < 21; ++i) {
    const double limit = std::exp(-grid[i] * grid[i] / 8.0);
    worst2 = std::max(worst2, std::abs(closer[i] - limit));
  }
  CHECK(worst2 < worst);
}

TEST_CASE("rayleigh limit needs a positive slope at zero") {
  const auto link = xdm::make_frailty_link(
      [](double mu) { return mu * mu; }, xdm::Interval(0.0, xdm::kInf));
  const auto shifted = xdm::shift_support(xdm::frailty_generator(link), 1.0);
  Eigen::ArrayXd grid(3);
  grid << 0.0, 0.5, 1.0;
  CHECK(code_of([&] { xdm::rayleigh_limit_curve(shifted, 10, grid); }) ==
        xdm::errc::nonpositive_slope);
  const auto rayleigh = xdm::make_quadratic_family("rayleigh").model;
  CHECK(code_of([&] { xdm::rayleigh_limit_curve(rayleigh, 10, grid); }) ==
        xdm::errc::out_of_support);
}

TEST_CASE("gamma frailty recovers the reciprocal-linear hazard") {
  const auto link = xdm::make_frailty_link(
      [](double mu) { return mu * mu; }, xdm::Interval(0.0, xdm::kInf));
  CHECK(link.pin == doctest::Approx(1.0));
  CHECK(link.theta_domain.lower == -xdm::kInf);
  CHECK(link.theta_domain.upper == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(link.mean_mapping(0.5) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(link.mean_mapping(-1.0) == doctest::Approx(0.5).epsilon(1e-9));

  const auto gen = xdm::frailty_generator(link);
  CHECK(gen.support().lower == 0.0);
  CHECK(gen.monotone_class() == xdm::MonotoneClass::Dfr);
  CHECK(gen.is_proper());
  for (const double y : {0.5, 1.0, 4.0})
    CHECK(gen.hazard(y) == doctest::Approx(1.0 / (1.0 + y)).epsilon(1e-8));

  const auto xd = xdm::frailty_xd(link, 0.5, 2.0);
  CHECK(xd.member.hazard(0.0) == doctest::Approx(0.5).epsilon(1e-9));
  for (const double mu : oracle::midpoints(0.1, 0.9, 9))
    CHECK(xd.unit_slope.v(mu) == doctest::Approx(-mu * mu).epsilon(1e-7));
  CHECK(code_of([&] { xdm::frailty_xd(link, 1.5, 1.0); }) ==
        xdm::errc::rate_out_of_domain);
}

TEST_CASE("tweedie frailty leaves survivor mass") {
  const double p = 1.5;
  const auto link = xdm::make_frailty_link(
      [p](double mu) { return std::pow(mu, p); }, xdm::Interval(0.0, xdm::kInf));
  CHECK(link.theta_domain.upper == doctest::Approx(1.0 / (2.0 - p)).epsilon(1e-9));
  const auto gen = xdm::frailty_generator(link);
  CHECK_FALSE(gen.is_proper());
  CHECK(gen.support().upper == xdm::kInf);
  CHECK(gen.censor_mass() ==
        doctest::Approx(std::exp(-1.0 / (2.0 - p))).epsilon(1e-6));
}

TEST_CASE("frailty links validate the variance function") {
  CHECK(code_of([] {
          xdm::make_frailty_link([](double mu) { return mu - 2.0; },
                                 xdm::Interval(0.0, xdm::kInf));
        }) == xdm::errc::invalid_variance_function);
  CHECK(code_of([] {
          xdm::make_frailty_link([](double) { return -1.0; },
                                 xdm::Interval(0.0, xdm::kInf));
        }) == xdm::errc::invalid_variance_function);
  // A custom pin moves the zero of the antiderivative.
  const auto link = xdm::make_frailty_link(
      [](double mu) { return mu * mu; }, xdm::Interval(0.0, xdm::kInf), 2.0);
  CHECK(link.pin == 2.0);
  CHECK(link.mean_mapping(0.0) == doctest::Approx(2.0).epsilon(1e-9));
}
