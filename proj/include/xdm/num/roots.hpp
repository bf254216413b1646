#pragma once

#include <functional>
#include <optional>

#include "xdm/interval.hpp"

namespace xdm::num {

inline constexpr double kRootAbsTol = 1e-12;
inline constexpr int kRootMaxIter = 200;

using Fn = std::function<double(double)>;

// Root of f on a bracketing interval [lo, hi] with f(lo), f(hi) of opposite
// sign (either orientation). Bisection maintains the bracket; Newton steps
// accelerate when a derivative is supplied and stay inside the bracket.
double find_root(const Fn& f, double lo, double hi, double flo, double fhi,
                 const Fn* deriv = nullptr, double abs_tol = kRootAbsTol,
                 int max_iter = kRootMaxIter);

struct Bracket {
  double lo, hi;
  double flo, fhi;
};

// Bracket for f(y) = target on an open interval where f is strictly monotone.
// Expands geometrically from the anchor, approaching finite endpoints by
// repeated halving so the bracket stays interior.
Bracket bracket_monotone(const Fn& f, double target, const Interval& domain,
                         double anchor, bool increasing);

}  // namespace xdm::num
