#pragma once

#include <cmath>
#include <functional>

namespace xdm::num {

inline constexpr double kFdStep = 1e-6;

// Central difference with one Richardson extrapolation level.
// Step max(kFdStep, kFdStep*|x|) per the numerics contract.
inline double central_derivative(const std::function<double(double)>& f, double x) {
  const double h = std::max(kFdStep, kFdStep * std::abs(x));
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

// Plain central difference, no extrapolation; used where the contract pins
// the uncorrected stencil.
inline double central_derivative_plain(const std::function<double(double)>& f,
                                       double x) {
  const double h = std::max(kFdStep, kFdStep * std::abs(x));
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Second derivative by central stencil with one Richardson level. The wider
// base step trades truncation against cancellation for twice-differenced
// values.
inline double second_derivative(const std::function<double(double)>& f, double x) {
  const double h = std::max(1e-4, 1e-4 * std::abs(x));
  auto stencil = [&](double hh) {
    return (f(x + hh) - 2.0 * f(x) + f(x - hh)) / (hh * hh);
  };
  const double d1 = stencil(h);
  const double d2 = stencil(0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace xdm::num
