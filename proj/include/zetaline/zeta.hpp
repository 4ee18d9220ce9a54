#pragma once

#include <utility>

#include "zetaline/ball.hpp"

namespace zetaline {

struct EvalConfig {
  long prec = kDefaultPrec;
  // Euler-Maclaurin direct-sum length; 0 picks max(50, 2*ceil|s|). Explicit
  // values below ceil|s| are rejected (the remainder bound needs them).
  long em_terms = 0;
  int em_order = 12;  // Bernoulli correction terms
  int quad_nodes = 32;
};

// Enclosures of zeta(s) and zeta'(s) by Euler-Maclaurin summation with the
// first-omitted-term remainder folded into the radius; the derivative comes
// from termwise analytic differentiation, its remainder from a Cauchy bound
// on a disc of radius 1/2.
std::pair<BallComplex, BallComplex> zeta_with_derivative(const BallComplex& s,
                                                         const EvalConfig& cfg);

// zeta'/zeta by ball division; UndecidedError if the zeta ball touches 0.
BallComplex log_deriv(const BallComplex& s, const EvalConfig& cfg);

// psi(z) = log z - 1/(2z) + O*(1/(4|z|^2)) after shifting to |z| >= 8,
// Re z >= 0 with psi(z) = psi(z+1) - 1/z.
BallComplex digamma(const BallComplex& z);

// log zeta(1+it) through the horizontal segment: the Dirichlet-series value
// at 3/2+it minus the integral of zeta'/zeta over [1, 3/2], with certified
// Gauss-Legendre remainders. Requires t >= 10. Implemented in segment.cpp.
BallComplex log_zeta_one_line(const BallReal& t, const EvalConfig& cfg);

// Exact Bernoulli number B_m over (m)! pieces are internal; this exposes the
// ball of B_{2k}/(2k)! used by the expansion (handy for tests).
BallReal bernoulli_over_factorial(int two_k, long prec);

}  // namespace zetaline
