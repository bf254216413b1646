#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "xdm/catalog.hpp"
#include "xdm/error.hpp"
#include "xdm/survival_model.hpp"

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

// Unit-rate hazard on (0, 1) stopped at 1: point mass e^{-1} at the end.
xdm::SurvivalModel censored_unit_model() {
  xdm::SurvivalModelParts parts;
  parts.support = xdm::Interval(0.0, 1.0);
  parts.integrated_hazard = [](double y) { return y; };
  parts.hazard = [](double) { return 1.0; };
  parts.hazard_derivative = [](double) { return 0.0; };
  parts.censor_mass = std::exp(-1.0);
  return xdm::SurvivalModel(std::move(parts));
}

// Decreasing hazard 1/(1+y)^2 whose integrated hazard stays bounded, so
// survivors remain at +inf with mass e^{-1}.
xdm::SurvivalModel improper_model() {
  xdm::SurvivalModelParts parts;
  parts.support = xdm::Interval(0.0, xdm::kInf);
  parts.integrated_hazard = [](double y) { return y / (1.0 + y); };
  parts.hazard = [](double y) { return 1.0 / ((1.0 + y) * (1.0 + y)); };
  parts.hazard_derivative = [](double y) { return -2.0 / std::pow(1.0 + y, 3); };
  parts.censor_mass = std::exp(-1.0);
  parts.monotone_class = xdm::MonotoneClass::Dfr;
  return xdm::SurvivalModel(std::move(parts));
}

}  // namespace

TEST_CASE("boundary conventions around the support") {
  const auto rayleigh = xdm::make_quadratic_family("rayleigh").model;
  CHECK(rayleigh.survival(-5.0) == 1.0);
  CHECK(rayleigh.integrated_hazard(-5.0) == 0.0);
  CHECK(rayleigh.survival(1.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(rayleigh.is_proper());

  const auto stopped = censored_unit_model();
  CHECK(stopped.survival(0.5) == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
  CHECK(stopped.survival(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(stopped.integrated_hazard(1.0) == doctest::Approx(1.0));
  CHECK(stopped.integrated_hazard(2.0) == xdm::kInf);
  CHECK(stopped.survival(2.0) == 0.0);
  CHECK(stopped.is_proper());

  const auto frail = improper_model();
  CHECK_FALSE(frail.is_proper());
  CHECK(frail.survival(1e9) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
}

TEST_CASE("interior clamp handles endpoint queries") {
  const auto stopped = censored_unit_model();
  CHECK(stopped.clamp_interior(0.0) > 0.0);
  CHECK(stopped.clamp_interior(1.0) < 1.0);
  CHECK(stopped.clamp_interior(0.5) == 0.5);
  CHECK(stopped.hazard(0.0) == doctest::Approx(1.0));
}

TEST_CASE("rate and slope at zero") {
  const auto gumbel = xdm::make_quadratic_family("gumbel").model;
  const auto [rate, slope] = xdm::rate_and_slope(gumbel);
  CHECK(rate == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(slope == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(xdm::slope_via_varform(gumbel) == doctest::Approx(1.0).epsilon(1e-6));

  const auto logistic = xdm::make_quadratic_family("logistic").model;
  const auto [lr, ls] = xdm::rate_and_slope(logistic);
  CHECK(lr == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(ls == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(xdm::slope_via_varform(logistic) == doctest::Approx(0.25).epsilon(1e-6));

  // Zero sits outside the open support of the rayleigh generator.
  const auto rayleigh = xdm::make_quadratic_family("rayleigh").model;
  CHECK(code_of([&] { xdm::rate_and_slope(rayleigh); }) ==
        xdm::errc::domain_error);
}

TEST_CASE("semiinvariants of the gumbel generator are all one") {
  const auto gumbel = xdm::make_quadratic_family("gumbel").model;
  const auto k = xdm::semiinvariants(gumbel, 4);
  REQUIRE(k.values.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(k.values[i] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(code_of([&] { xdm::semiinvariants(gumbel, 5); }) ==
        xdm::errc::unsupported_order);
}

TEST_CASE("semiinvariants transform with scale order by order") {
  const auto logistic = xdm::make_quadratic_family("logistic").model;
  const auto base = xdm::semiinvariants(logistic, 4);
  for (const double c : {0.5, 2.0, 10.0}) {
    const auto scaled = xdm::semiinvariants(xdm::scale_model(logistic, c), 4);
    for (int i = 1; i <= 4; ++i) {
      const double expect = base.values[i - 1] / std::pow(c, i);
      CHECK(scaled.values[i - 1] == doctest::Approx(expect).epsilon(1e-8));
    }
  }
}

TEST_CASE("semiinvariants add under pointwise minima") {
  const auto gumbel = xdm::make_quadratic_family("gumbel").model;
  const auto logistic = xdm::make_quadratic_family("logistic").model;
  const auto combined = xdm::min_of({gumbel, logistic});
  const auto ka = xdm::semiinvariants(gumbel, 4);
  const auto kb = xdm::semiinvariants(logistic, 4);
  const auto kc = xdm::semiinvariants(combined, 4);
  for (int i = 0; i < 4; ++i)
    CHECK(kc.values[i] ==
          doctest::Approx(ka.values[i] + kb.values[i]).epsilon(1e-8));
}

TEST_CASE("minimum of exponentials adds the rates") {
  const auto m = xdm::min_of({exponential_model(2.0), exponential_model(3.0)});
  CHECK(m.hazard(1.0) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(m.survival(1.0) == doctest::Approx(std::exp(-5.0)).epsilon(1e-12));
  CHECK(m.support().lower == 0.0);
  // A constant hazard is neither strictly increasing nor decreasing.
  CHECK(m.monotone_class() == xdm::MonotoneClass::None);
}

TEST_CASE("minimum requires overlapping supports") {
  const auto uniform = xdm::make_quadratic_family("uniform").model;
  const auto pareto = xdm::make_quadratic_family("pareto").model;
  CHECK(code_of([&] { xdm::min_of({uniform, pareto}); }) ==
        xdm::errc::empty_support);
  const auto gumbel = xdm::make_quadratic_family("gumbel").model;
  const auto both = xdm::min_of({gumbel, pareto});
  // Below the pareto support the minimum follows the gumbel coordinate alone.
  CHECK(both.support().lower == -xdm::kInf);
  CHECK(both.survival(0.0) ==
        doctest::Approx(gumbel.survival(0.0)).epsilon(1e-15));
}

TEST_CASE("scaling a model rescales hazard and support") {
  const auto gumbel = xdm::make_quadratic_family("gumbel").model;
  const auto doubled = xdm::scale_model(gumbel, 2.0);
  CHECK(doubled.hazard(1.0) == doctest::Approx(std::exp(0.5) / 2.0).epsilon(1e-12));
  CHECK(doubled.survival(2.0) == doctest::Approx(gumbel.survival(1.0)).epsilon(1e-12));
  const auto back = xdm::scale_model(doubled, 0.5);
  for (const double y : oracle::midpoints(-3.0, 3.0, 11))
    CHECK(back.survival(y) == doctest::Approx(gumbel.survival(y)).epsilon(1e-12));
  CHECK(code_of([&] { xdm::scale_model(gumbel, 0.0); }) ==
        xdm::errc::invalid_scale);
}

TEST_CASE("sampling is deterministic and matches the law") {
  const auto rayleigh = xdm::make_quadratic_family("rayleigh").model;
  const auto a = xdm::sample(rayleigh, 200, 7);
  const auto b = xdm::sample(rayleigh, 200, 7);
  const auto c = xdm::sample(rayleigh, 200, 8);
  CHECK((a == b).all());
  CHECK_FALSE((a == c).all());

  const auto xs = xdm::sample(rayleigh, 20000, 12345);
  std::vector<double> v(xs.data(), xs.data() + xs.size());
  const double ks = oracle::ks_statistic(
      v, [](double y) { return 1.0 - std::exp(-0.5 * y * y); });
  CHECK(ks < 1.36 / std::sqrt(20000.0));
}

TEST_CASE("censored draws land on the endpoint") {
  const auto stopped = censored_unit_model();
  const auto xs = xdm::sample(stopped, 4000, 99);
  int at_end = 0;
  for (Eigen::Index i = 0; i < xs.size(); ++i) {
    CHECK(xs[i] > 0.0);
    CHECK(xs[i] <= 1.0);
    if (xs[i] == 1.0) ++at_end;
  }
  const double frac = at_end / 4000.0;
  CHECK(frac == doctest::Approx(std::exp(-1.0)).epsilon(0.1));

  const auto frail = improper_model();
  const auto ys = xdm::sample(frail, 4000, 99);
  int infinite = 0;
  for (Eigen::Index i = 0; i < ys.size(); ++i)
    if (!std::isfinite(ys[i])) ++infinite;
  CHECK(infinite / 4000.0 == doctest::Approx(std::exp(-1.0)).epsilon(0.1));
}

TEST_CASE("grid classification of hazard monotonicity") {
  // Strict convention: a flat hazard earns no monotone label.
  CHECK(xdm::classify_monotone(exponential_model(2.0)) ==
        xdm::MonotoneClass::None);
  CHECK(xdm::classify_monotone(improper_model()) == xdm::MonotoneClass::Dfr);

  xdm::SurvivalModelParts parts;
  parts.support = xdm::Interval(0.0, xdm::kInf);
  parts.integrated_hazard = [](double y) {
    return (std::pow(y - 1.0, 3) + 1.0) / 3.0 + 0.5 * y;
  };
  parts.hazard = [](double y) { return (y - 1.0) * (y - 1.0) + 0.5; };
  parts.hazard_derivative = [](double y) { return 2.0 * (y - 1.0); };
  const xdm::SurvivalModel bathtub{std::move(parts)};
  CHECK(xdm::classify_monotone(bathtub) == xdm::MonotoneClass::None);
}

TEST_CASE("survival sup distance over a window") {
  const auto gumbel = xdm::make_quadratic_family("gumbel").model;
  const auto logistic = xdm::make_quadratic_family("logistic").model;
  CHECK(xdm::survival_sup_distance(gumbel, gumbel, xdm::Interval(-2.0, 2.0)) ==
        0.0);
  const double d =
      xdm::survival_sup_distance(gumbel, logistic, xdm::Interval(-2.0, 2.0));
  const double d_sym =
      xdm::survival_sup_distance(logistic, gumbel, xdm::Interval(-2.0, 2.0));
  CHECK(d == doctest::Approx(d_sym).epsilon(1e-15));
  CHECK(d > 0.05);
}

TEST_CASE("exponential tail of a conditioned exponential is exact") {
  // Memorylessness through the model interface: H(y+c) - H(c) = rate * y.
  const auto expo = exponential_model(1.5);
  for (const double c : {0.5, 2.0})
    for (const double y : {0.1, 1.0, 3.0})
      CHECK(expo.integrated_hazard(y + c) - expo.integrated_hazard(c) ==
            doctest::Approx(1.5 * y).epsilon(1e-12));
}
