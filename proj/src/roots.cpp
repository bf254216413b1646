#include "xdm/num/roots.hpp"

#include <cmath>

#include "xdm/error.hpp"

namespace xdm::num {

double find_root(const Fn& f, double lo, double hi, double flo, double fhi,
                 const Fn* deriv, double abs_tol, int max_iter) {
  XDM_REQUIRE(lo <= hi, errc::invalid_argument, "root bracket reversed");
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  XDM_REQUIRE((flo < 0.0) != (fhi < 0.0), errc::numerical_error,
              "root bracket does not straddle zero");

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < max_iter; ++it) {
    const double tol = abs_tol * std::max(1.0, std::abs(x));
    if (hi - lo <= tol) break;

    double candidate = 0.5 * (lo + hi);
    if (deriv) {
      const double fx = f(x);
      if (fx == 0.0) return x;
      if ((fx < 0.0) == (flo < 0.0)) {
        lo = x;
        flo = fx;
      } else {
        hi = x;
        fhi = fx;
      }
      const double d = (*deriv)(x);
      if (std::isfinite(d) && d != 0.0) {
        const double newton = x - fx / d;
        if (newton > lo && newton < hi) candidate = newton;
        else candidate = 0.5 * (lo + hi);
      }
      x = candidate;
      continue;
    }

    const double fm = f(candidate);
    if (fm == 0.0) return candidate;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = candidate;
      flo = fm;
    } else {
      hi = candidate;
      fhi = fm;
    }
    x = 0.5 * (lo + hi);
  }
  return 0.5 * (lo + hi);
}

Bracket bracket_monotone(const Fn& f, double target, const Interval& domain,
                         double anchor, bool increasing) {
  XDM_REQUIRE(domain.contains(anchor), errc::invalid_argument,
              "bracket anchor outside domain");
  const double sign = increasing ? 1.0 : -1.0;
  double y = anchor;
  double g = sign * (f(y) - target);

  // g < 0 means the root lies toward the upper end of the domain.
  const bool go_up = g < 0.0;
  double prev = y;
  double gprev = g;
  double step = std::max(0.5, 0.1 * std::abs(y));
  for (int it = 0; it < kRootMaxIter; ++it) {
    if (g == 0.0) return {y, y, 0.0, 0.0};
    if ((g < 0.0) != go_up) {
      // Sign flipped: [prev, y] (ordered) brackets the root.
      double lo = std::min(prev, y), hi = std::max(prev, y);
      double flo = f(lo) - target, fhi = f(hi) - target;
      return {lo, hi, flo, fhi};
    }
    prev = y;
    gprev = g;
    const double edge = go_up ? domain.upper : domain.lower;
    if (std::isinf(edge)) {
      y = go_up ? y + step : y - step;
      step *= 2.0;
    } else {
      y = 0.5 * (y + edge);  // halve the distance to the open endpoint
      if (y == prev) break;
    }
    g = sign * (f(y) - target);
    if (std::isnan(g)) break;
  }
  (void)gprev;
  raise(errc::numerical_error, "monotone bracketing failed to straddle target");
}

}  // namespace xdm::num
