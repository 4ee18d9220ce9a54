#pragma once

#include <string>
#include <vector>

#include "zetaline/ball.hpp"
#include "zetaline/primes.hpp"

namespace zetaline {

// Shared constants for every bound evaluation. Computed once, immutable.
struct Constants {
  BallReal lambda0;      // root of e^l (l-1) = 1, about 1.27846
  BallReal a0;           // (1 + e^{lambda0}) / lambda0, about 3.59112
  BallReal euler_gamma;
  BallReal log_zeta_32;  // log zeta(3/2), about 0.96026
};

// Certified bracket around lambda0 plus the derived companions.
Constants solve_lambda0(long prec = kDefaultPrec);

// (1/delta^2 + 1) * log T / (2 pi T). Requires T > 1 and delta in (0,1).
BallReal e_delta(double T, double delta, long prec = kDefaultPrec);

// Height of verified zeros T, slack delta, and the derived tail budget.
// The `limit` flavor pins the tail budget to exactly zero; results computed
// with it describe an idealized endpoint, not a certified statement.
struct BoundParams {
  double T = 0;
  double delta = 0;
  BallReal e_delta;
  bool limit = false;

  BoundParams(double T, double delta, long prec = kDefaultPrec);
  static BoundParams rh_limit(long prec = kDefaultPrec);
};

// 1 / (A0^{-1} (log t)^{2 alpha - 1} - 1) for alpha in [1, 3/2], t >= 1e6.
BallReal epsilon_factor(double alpha, double t, const Constants& consts,
                        long prec = kDefaultPrec);

// A0 (log t)^{1 - 2 alpha}; stays below 1 throughout the admissible range.
BallReal rho_sum_coefficient(double alpha, double t, const Constants& consts,
                             long prec = kDefaultPrec);

// (1 + eps(alpha,t)) [ A0/2 (log t)^{2-2a} + sum_{n<=log^2 t} Lambda(n)/n^a
//                      + (2a-1)/lambda0 * E + 3.2/t^2 ].
// The sieve must cover log^2 t.
BallReal general_alpha_bound(double alpha, double t, const BoundParams& params,
                             const Constants& consts, const PrimeTable& primes,
                             long prec = kDefaultPrec);

struct TheoremBounds {
  BallReal logderiv;  // |zeta'/zeta(1+it)|
  BallReal log_zeta;  // |log zeta(1+it)|
  BallReal inv_zeta;  // |1/zeta(1+it)|
  BallReal zeta;      // |zeta(1+it)|, same value as inv_zeta
};

// The four packaged 1-line bounds. Valid for 1e6 <= t <= (1-delta) T.
TheoremBounds theorem_bounds(double t, const BoundParams& params,
                             long prec = kDefaultPrec);

// Intermediate assemblies the packaged constants were distilled from.
// Exposed so the audit (and tests) can certify the packaging step.
BallReal raw_logderiv_assembly(double t, const BoundParams& params,
                               const Constants& consts,
                               long prec = kDefaultPrec);
BallReal raw_log_zeta_assembly(double t, const BoundParams& params,
                               const Constants& consts,
                               long prec = kDefaultPrec);

// A literature bound with its validity window. Values outside the window are
// still computed, only flagged, so plot overlays can share one grid.
struct ComparisonBound {
  std::string name;
  BallReal value;
  double t_min = 0;
  double t_max = 0;  // infinity when the window is one-sided
  bool in_window = false;
};

// Named reference bounds at height t (t >= 3). Never throws past the guard.
std::vector<ComparisonBound> comparison_bounds(double t,
                                               long prec = kDefaultPrec);

struct AuditReport {
  bool passed = false;
  std::vector<std::string> checks;    // one line per certified step
  std::vector<std::string> failures;  // step and grid point of each violation
};

// Re-derives the packaged constants: raw assemblies stay below the packaged
// bounds across the grid, the quadratic overestimate of e^x holds on
// [0, 1.297], and the scalar constants dominate their exact counterparts.
// An empty grid selects 200 log-spaced points in [1e6, 1e12].
AuditReport audit_constants(const BoundParams& params, const Constants& consts,
                            const std::vector<double>& t_grid = {},
                            long prec = kDefaultPrec);

}  // namespace zetaline
