#pragma once

#include <vector>

#include "xdm/interval.hpp"
#include "xdm/num/quadrature.hpp"

namespace xdm::num {

// Tabulated antiderivative F(x) = int_anchor^x f(t) dt of an integrand with
// constant sign on an open interval, together with monotone inversion.
//
// Knots are laid out adaptively at construction: step sizes keep |dF| per
// interval bounded, halve toward finite endpoints and grow geometrically
// toward infinite ones. Queries between knots integrate from the nearest
// knot; queries beyond the table re-run the same stepping transiently, so
// the object stays immutable after construction.
class MonotoneAntiderivative {
 public:
  MonotoneAntiderivative(Fn f, Interval domain, double anchor);

  double value(double x) const;
  double inverse(double y) const;

  double anchor_point() const { return anchor_; }
  const Interval& domain() const { return domain_; }
  bool increasing() const { return increasing_; }

  // Improper integral from the anchor to the named domain endpoint.
  const TailIntegral& lower_tail() const { return lower_tail_; }
  const TailIntegral& upper_tail() const { return upper_tail_; }

 private:
  struct Step {
    double x;
    double F;
  };

  void build_side(bool toward_upper);
  Step advance(double x, double F, bool toward_upper) const;
  double invert_in(double lo, double hi, double Flo, double y) const;

  Fn f_;
  Interval domain_;
  double anchor_ = 0;
  bool increasing_ = true;
  std::vector<double> x_;
  std::vector<double> F_;
  TailIntegral lower_tail_{0, false};
  TailIntegral upper_tail_{0, false};
};

}  // namespace xdm::num
