#pragma once

// Test-side numerical helpers. Deliberately independent of the library
// kernels so derived quantities are checked against a second implementation.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

using Fn = std::function<double(double)>;

// Central difference with one Richardson extrapolation level.
inline double derivative(const Fn& f, double x, double scale = 1e-5) {
  const double h = scale * std::max(1.0, std::abs(x));
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

inline double second_derivative(const Fn& f, double x, double scale = 1e-3) {
  const double h = scale * std::max(1.0, std::abs(x));
  auto stencil = [&](double hh) {
    return (f(x + hh) - 2.0 * f(x) + f(x - hh)) / (hh * hh);
  };
  const double d1 = stencil(h);
  const double d2 = stencil(0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}

// Composite Simpson rule on [a, b].
inline double integral(const Fn& f, double a, double b, int panels = 2000) {
  const double h = (b - a) / (2.0 * panels);
  double sum = f(a) + f(b);
  for (int i = 1; i < 2 * panels; ++i)
    sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Hazard of a closed-form survival function, via the log derivative.
inline double hazard_of_survival(const Fn& survival, double y) {
  return derivative([&](double t) { return -std::log(survival(t)); }, y);
}

// Kolmogorov-Smirnov statistic of a sample against a CDF.
inline double ks_statistic(std::vector<double> xs, const Fn& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double F = cdf(xs[i]);
    d = std::max(d, std::max(F - i / n, (i + 1) / n - F));
  }
  return d;
}

// Evenly spaced interior grid (endpoints excluded by half steps).
inline std::vector<double> midpoints(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * (i + 0.5) / n;
  return out;
}

}  // namespace oracle
