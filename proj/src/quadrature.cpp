#include "xdm/num/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "xdm/error.hpp"
#include "xdm/interval.hpp"

namespace xdm::num {
namespace {

// Kronrod 15 abscissae/weights on [-1, 1] with the embedded Gauss 7 rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double kronrod;
  double gauss;
  double err;
};

PanelResult gk15(const Fn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fc = f(c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  PanelResult r;
  r.kronrod = resk * h;
  r.gauss = resg * h;
  r.err = std::abs(r.kronrod - r.gauss);
  return r;
}

struct Panel {
  double a, b, value, err;
  bool operator<(const Panel& o) const { return err < o.err; }
};

}  // namespace

double integrate(const Fn& f, double a, double b, double rel, double abs) {
  XDM_REQUIRE(std::isfinite(a) && std::isfinite(b), errc::invalid_argument,
              "integrate requires finite bounds");
  XDM_REQUIRE(a <= b, errc::invalid_argument, "integrate requires a <= b");
  if (a == b) return 0.0;

  PanelResult first = gk15(f, a, b);
  std::priority_queue<Panel> queue;
  queue.push({a, b, first.kronrod, first.err});
  double total = first.kronrod;
  double total_err = first.err;

  const int kMaxPanels = 4000;
  int panels = 1;
  while (total_err > std::max(abs, rel * std::abs(total)) && panels < kMaxPanels) {
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at floating-point resolution; keep its estimate.
      total_err -= worst.err;
      continue;
    }
    PanelResult left = gk15(f, worst.a, mid);
    PanelResult right = gk15(f, mid, worst.b);
    total += left.kronrod + right.kronrod - worst.value;
    total_err += left.err + right.err - worst.err;
    queue.push({worst.a, mid, left.kronrod, left.err});
    queue.push({mid, worst.b, right.kronrod, right.err});
    ++panels;
  }
  XDM_REQUIRE(std::isfinite(total), errc::integration_failure,
              "integrand produced a non-finite panel sum");
  XDM_REQUIRE(total_err <= std::max(abs, rel * std::abs(total)) ||
                  total_err <= std::max(abs, rel) * std::max(1.0, std::abs(total)),
              errc::integration_failure, "adaptive quadrature budget exhausted");
  return total;
}

double integrate_signed(const Fn& f, double a, double b, double rel, double abs) {
  if (a <= b) return integrate(f, a, b, rel, abs);
  return -integrate(f, b, a, rel, abs);
}

TailIntegral integrate_to_endpoint(const Fn& f, double from, double endpoint,
                                   double rel) {
  XDM_REQUIRE(std::isfinite(from), errc::invalid_argument,
              "tail integral anchor must be finite");
  XDM_REQUIRE(from != endpoint, errc::invalid_argument,
              "tail integral anchor equals endpoint");

  const int kMaxSegments = 512;
  const double sign = endpoint > from ? 1.0 : -1.0;

  double sum = 0.0;
  double prev = from;
  double term = 0.0;
  double prior = 0.0;
  int segments = 0;
  int calm = 0;
  for (int k = 0; k < kMaxSegments; ++k) {
    double next;
    double seg_rel = rel;
    if (std::isinf(endpoint)) {
      const double mag = std::abs(prev);
      next = prev + sign * std::max(1.0, mag);
      // Past this magnitude, powers inside the integrand can overflow and
      // make a divergent tail look like it vanished.
      if (std::abs(next) > kTailMagnitudeCap) break;
    } else {
      next = endpoint - 0.5 * (endpoint - prev);
      // Segment boundary resolved to floating-point precision.
      if (next == prev || next == endpoint) break;
      // Rounding of quadrature nodes against the endpoint floors the
      // relative accuracy a segment this deep can deliver; demand no more
      // than that, and stop once even coarse accuracy is out of reach.
      const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                           std::abs(endpoint) / std::abs(next - prev);
      if (noise > 1e-3) break;
      seg_rel = std::max(rel, noise);
    }
    prior = term;
    term = integrate_signed(f, prev, next, seg_rel, kQuadAbsTol);
    sum += term;
    prev = next;
    ++segments;
    if (!std::isfinite(sum) || std::abs(sum) > kDivergenceCap)
      return {sum, true};
    if (std::abs(term) <= std::max(kQuadAbsTol, kCauchyTol * std::abs(sum))) {
      if (++calm >= 2) return {sum, false};
    } else {
      calm = 0;
    }
  }
  // Subdivision exhausted before the terms went calm. Logarithmic blow-up
  // leaves near-constant terms, while a convergent endpoint singularity
  // leaves terms that still shrink geometrically per halving.
  const bool small =
      std::abs(term) <= std::max(kQuadAbsTol, kCauchyTol * std::abs(sum));
  const bool decaying =
      segments >= 2 && std::abs(term) < kTermDecayRatio * std::abs(prior);
  return {sum, !(small || decaying)};
}

}  // namespace xdm::num
