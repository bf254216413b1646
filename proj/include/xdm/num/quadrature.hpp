#pragma once

#include <functional>

namespace xdm::num {

inline constexpr double kQuadRelTol = 1e-10;
inline constexpr double kQuadAbsTol = 1e-12;
inline constexpr double kCauchyTol = 1e-10;
inline constexpr double kDivergenceCap = 1e12;
// Outward expansion stops here so that integrands composing a few powers of
// the argument stay clear of double overflow; anything still contributing
// beyond this magnitude is treated like an exhausted budget.
inline constexpr double kTailMagnitudeCap = 1e100;
// A trailing segment shrinking by less than this factor per geometric step is
// read as non-decaying (logarithmic or worse) when the budget runs out.
inline constexpr double kTermDecayRatio = 0.95;

using Fn = std::function<double(double)>;

// Adaptive quadrature over finite [a, b] (a <= b) with the embedded
// Gauss7/Kronrod15 pair. Throws IntegrationFailure when the budget is
// exhausted before the tolerance is met.
double integrate(const Fn& f, double a, double b, double rel = kQuadRelTol,
                 double abs = kQuadAbsTol);

// Signed orientation: integrates from a to b regardless of order.
double integrate_signed(const Fn& f, double a, double b, double rel = kQuadRelTol,
                        double abs = kQuadAbsTol);

struct TailIntegral {
  double value = 0.0;
  bool divergent = false;
};

// Improper integral from a finite interior point toward an endpoint that may
// be infinite or singular, by geometric subdivision toward the endpoint.
// Divergence is declared when partial sums exceed kDivergenceCap in magnitude
// or when subdivision runs out (budget, magnitude cap, or floating-point
// resolution at a finite endpoint) while the segment terms are neither below
// the Cauchy threshold nor decaying geometrically. The anchor is assumed to
// sit at a moderate magnitude inside the integrand's domain.
TailIntegral integrate_to_endpoint(const Fn& f, double from, double endpoint,
                                   double rel = kQuadRelTol);

}  // namespace xdm::num
