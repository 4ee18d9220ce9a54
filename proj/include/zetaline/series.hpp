#pragma once

#include <vector>

#include "zetaline/ball.hpp"

namespace zetaline {

// Truncated power series in v with complex ball coefficients plus a uniform
// tail bound: the modelled function f satisfies
//   f(v) in  sum_k coeff[k] v^k  +  (disc of radius tail)   for |v| <= radius.
// All coefficient arithmetic is ball arithmetic; the tail is a double kept
// rigorous with upward rounding.
struct TaylorModel {
  std::vector<BallComplex> coeff;
  double tail = 0;
  double radius = 0;
  long prec = kDefaultPrec;

  int degree() const { return static_cast<int>(coeff.size()) - 1; }

  static TaylorModel zero(int degree, double radius, long prec);
  static TaylorModel constant(const BallComplex& c0, int degree, double radius, long prec);
  // c0 + c1 v
  static TaylorModel linear(const BallComplex& c0, const BallComplex& c1, int degree,
                            double radius, long prec);
  // e^{a v}, Lagrange tail
  static TaylorModel exp_linear(const BallComplex& a, int degree, double radius, long prec);
  // 1/(c + v); requires |c| > radius, geometric tail
  static TaylorModel geometric(const BallComplex& c, int degree, double radius, long prec);

  // Upper bound for |f| on |v| <= radius.
  double sup_norm() const;
  // Sum of |coeff[k]| radius^k without the tail.
  double poly_norm() const;

  BallComplex eval(const BallComplex& v) const;
  BallComplex eval_real(const BallReal& v) const;
};

TaylorModel tm_add(const TaylorModel& a, const TaylorModel& b);
TaylorModel tm_sub(const TaylorModel& a, const TaylorModel& b);
TaylorModel tm_mul(const TaylorModel& a, const TaylorModel& b);
TaylorModel tm_scale(const TaylorModel& a, const BallComplex& s);
TaylorModel tm_scale_real(const TaylorModel& a, const BallReal& s);
TaylorModel tm_widen(const TaylorModel& a, double extra_tail);

}  // namespace zetaline
