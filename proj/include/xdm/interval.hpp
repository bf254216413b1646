#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "xdm/error.hpp"

namespace xdm {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Open interval on the extended real line. lower < upper always holds.
struct Interval {
  double lower;
  double upper;

  Interval(double lo, double hi) : lower(lo), upper(hi) {
    XDM_REQUIRE(!(std::isnan(lo) || std::isnan(hi)), errc::invalid_argument,
                "interval endpoint is NaN");
    XDM_REQUIRE(lo < hi, errc::invalid_argument, "interval requires lower < upper");
  }

  bool contains(double y) const { return lower < y && y < upper; }
  bool contains_closure(double y) const { return lower <= y && y <= upper; }
  bool contains_interval(const Interval& other) const {
    return lower <= other.lower && other.upper <= upper;
  }
  bool bounded() const { return std::isfinite(lower) && std::isfinite(upper); }
  double width() const { return upper - lower; }

  // A finite point well inside the interval, used as integration anchor,
  // bracketing seed, and default pin.
  double anchor() const {
    if (bounded()) return 0.5 * (lower + upper);
    if (std::isfinite(lower)) return lower + std::min(1.0, 0.5 * width());
    if (std::isfinite(upper)) return upper - std::min(1.0, 0.5 * width());
    return 0.0;
  }
};

inline bool same_interval(const Interval& a, const Interval& b, double tol = 0.0) {
  auto close = [tol](double x, double y) {
    if (std::isinf(x) || std::isinf(y)) return x == y;
    return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
  };
  return close(a.lower, b.lower) && close(a.upper, b.upper);
}

// Finite sub-window for grid evaluation: finite endpoints are inset by a
// relative margin, infinite ones are cut at span away from the finite side.
inline Interval probe_window(const Interval& iv, double span = 20.0,
                             double inset = 1e-3) {
  double lo = iv.lower;
  double hi = iv.upper;
  if (std::isfinite(lo) && std::isfinite(hi)) {
    const double w = hi - lo;
    return {lo + inset * w, hi - inset * w};
  }
  if (std::isfinite(lo)) return {lo + inset * std::max(1.0, std::abs(lo)), lo + span};
  if (std::isfinite(hi)) return {hi - span, hi - inset * std::max(1.0, std::abs(hi))};
  return {-span, span};
}

}  // namespace xdm
