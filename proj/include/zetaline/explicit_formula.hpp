#pragma once

#include "zetaline/ball.hpp"
#include "zetaline/bounds.hpp"
#include "zetaline/primes.hpp"
#include "zetaline/zeros.hpp"
#include "zetaline/zeta.hpp"

namespace zetaline {

// Parameters of the weighted identity. Any x, y >= 2 are legal. The
// instantiate factory picks y = exp(lambda0/(alpha - 1/2)), x = log^2 t / y,
// nudging x up to 2 at small heights.
struct FormulaParams {
  double x;
  double y;
  BallComplex s;

  FormulaParams(double x, double y, BallComplex s);
  static FormulaParams instantiate(double alpha, double t,
                                   const Constants& consts,
                                   long prec = kDefaultPrec);
};

// Plateau 1 on [2, x], then log(xy/n)/log(y) down to 0 at n = xy.
BallReal weight_w(long n, const FormulaParams& params,
                  long prec = kDefaultPrec);

struct FormulaSides {
  BallComplex lhs;            // zeta'/zeta(s)
  BallComplex zero_term;      // rho = 1/2 + i gamma, both signs, |gamma| up
                              // to the table's claimed completeness
  BallComplex trivial_term;   // rho = -2k
  BallComplex pole_term;
  BallComplex prime_term;     // sum of Lambda(n) w(n) n^{-s}
  BallReal zero_tail_budget;  // bound on the omitted |gamma| contribution
};

// Every term of the identity as an enclosure. Requires Im s >= 10, a sieve
// covering xy, and an ordinate table; s is expected exact (built from
// doubles), since the tail budget is anchored at its midpoint height.
FormulaSides formula_sides(const FormulaParams& params, const ZeroTable& table,
                           const PrimeTable& primes, const EvalConfig& cfg);

// zero_tail_budget - |lhs - (-zero - trivial + pole - prime)|. A certified
// nonnegative sign validates the identity at the working truncation; a
// certified negative value is a finding for the caller to report.
BallReal residual_check(const FormulaParams& params, const ZeroTable& table,
                        const PrimeTable& primes, const EvalConfig& cfg);

}  // namespace zetaline
