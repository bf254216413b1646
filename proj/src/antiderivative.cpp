#include "xdm/num/antiderivative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xdm/error.hpp"
#include "xdm/num/roots.hpp"

namespace xdm::num {
namespace {

constexpr int kMaxKnotsPerSide = 500;
constexpr double kRangeCap = 2e4;
constexpr double kStepTargetF = 2.0;
constexpr double kStepLimitF = 4.0;

}  // namespace

MonotoneAntiderivative::MonotoneAntiderivative(Fn f, Interval domain,
                                               double anchor)
    : f_(std::move(f)), domain_(domain), anchor_(anchor) {
  XDM_REQUIRE(domain_.contains(anchor_), errc::invalid_argument,
              "antiderivative anchor must be interior to the domain");
  const double f0 = f_(anchor_);
  XDM_REQUIRE(std::isfinite(f0) && f0 != 0.0, errc::invalid_argument,
              "antiderivative integrand must be finite and nonzero");
  increasing_ = f0 > 0.0;

  std::vector<double> lx, lF;
  x_.push_back(anchor_);
  F_.push_back(0.0);
  build_side(true);
  std::swap(lx, x_);
  std::swap(lF, F_);
  x_.push_back(anchor_);
  F_.push_back(0.0);
  build_side(false);
  std::reverse(x_.begin(), x_.end());
  std::reverse(F_.begin(), F_.end());
  x_.insert(x_.end(), lx.begin() + 1, lx.end());
  F_.insert(F_.end(), lF.begin() + 1, lF.end());

  auto fn = f_;
  lower_tail_ = integrate_to_endpoint(fn, anchor_, domain_.lower);
  upper_tail_ = integrate_to_endpoint(fn, anchor_, domain_.upper);
}

MonotoneAntiderivative::Step MonotoneAntiderivative::advance(
    double x, double F, bool toward_upper) const {
  const double edge = toward_upper ? domain_.upper : domain_.lower;
  const double sign = toward_upper ? 1.0 : -1.0;
  const double fx = std::abs(f_(x));
  double dx = kStepTargetF / std::max(fx, 1e-300);
  if (std::isfinite(edge)) {
    dx = std::min(dx, 0.5 * std::abs(edge - x));
  } else {
    dx = std::min(dx, std::max(1.0, std::abs(x)));
  }
  for (int tries = 0; tries < 80; ++tries) {
    const double x2 = x + sign * dx;
    if (x2 == x) break;
    // Node rounding floors the relative accuracy of a short step far from
    // zero; do not demand more than the step can deliver.
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                         std::max(std::abs(x), std::abs(x2)) / dx;
    const double dF = integrate_signed(f_, x, x2, std::max(kQuadRelTol, noise));
    if (std::abs(dF) <= kStepLimitF) return {x2, F + dF};
    dx *= 0.5;
  }
  return {x, F};
}

void MonotoneAntiderivative::build_side(bool toward_upper) {
  const double edge = toward_upper ? domain_.upper : domain_.lower;
  double x = x_.back();
  double F = F_.back();
  int calm = 0;
  for (int k = 0; k < kMaxKnotsPerSide; ++k) {
    // Stay clear of the zone where quadrature nodes collapse onto the edge.
    if (std::isfinite(edge) &&
        std::abs(edge - x) <= 1e-10 * std::max(1.0, std::abs(edge)))
      break;
    if (std::abs(F) > kRangeCap) break;
    Step s = advance(x, F, toward_upper);
    if (s.x == x) break;
    const double dF = std::abs(s.F - F);
    x = s.x;
    F = s.F;
    x_.push_back(x);
    F_.push_back(F);
    if (!std::isfinite(edge)) {
      calm = dF <= 1e-14 * std::max(1.0, std::abs(F)) ? calm + 1 : 0;
      if (calm >= 3) break;
    }
  }
}

double MonotoneAntiderivative::value(double x) const {
  XDM_REQUIRE(x >= domain_.lower && x <= domain_.upper, errc::numerical_error,
              "antiderivative evaluated outside its domain");
  if (x == anchor_) return 0.0;
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  if (it == x_.begin()) return F_.front() + integrate_signed(f_, x_.front(), x);
  const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
  return F_[i] + integrate_signed(f_, x_[i], x);
}

double MonotoneAntiderivative::invert_in(double lo, double hi, double Flo,
                                         double y) const {
  Fn g = [this, lo, Flo, y](double x) {
    return Flo + integrate_signed(f_, lo, x) - y;
  };
  const double glo = Flo - y;
  const double ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  Fn df = f_;
  return find_root(g, lo, hi, glo, ghi, &df);
}

double MonotoneAntiderivative::inverse(double y) const {
  const auto cmp_lo = [this](double F, double t) {
    return increasing_ ? F < t : F > t;
  };
  const bool below_front = increasing_ ? y < F_.front() : y > F_.front();
  const bool above_back = increasing_ ? y > F_.back() : y < F_.back();
  if (!below_front && !above_back) {
    auto it = std::lower_bound(F_.begin(), F_.end(), y, cmp_lo);
    std::size_t i = static_cast<std::size_t>(it - F_.begin());
    if (i == 0) return x_.front();
    return invert_in(x_[i - 1], x_[i], F_[i - 1], y);
  }
  // Transient walk past the table toward the relevant endpoint.
  const bool toward_upper = above_back;
  double x = toward_upper ? x_.back() : x_.front();
  double F = toward_upper ? F_.back() : F_.front();
  const double edge = toward_upper ? domain_.upper : domain_.lower;
  int calm = 0;
  for (int k = 0; k < 400; ++k) {
    if (std::isfinite(edge) &&
        std::abs(edge - x) <= 1e-13 * std::max(1.0, std::abs(edge)))
      break;
    Step s = advance(x, F, toward_upper);
    if (s.x == x) break;
    const bool crossed = increasing_ == toward_upper ? s.F >= y : s.F <= y;
    if (crossed) {
      return toward_upper ? invert_in(x, s.x, F, y)
                          : invert_in(s.x, x, s.F, y);
    }
    const double dF = std::abs(s.F - F);
    x = s.x;
    F = s.F;
    calm = dF <= 1e-14 * std::max(1.0, std::abs(F)) ? calm + 1 : 0;
    if (calm >= 3) break;
  }
  if (std::abs(F - y) <= 1e-7 * std::max(1.0, std::abs(y))) return x;
  raise(errc::numerical_error, "antiderivative inversion target out of range");
}

}  // namespace xdm::num
