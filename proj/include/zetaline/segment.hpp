#pragma once

#include <vector>

#include "zetaline/series.hpp"
#include "zetaline/zeta.hpp"

namespace zetaline {

// Raw power sums S_j = sum_{n<N} n^{-5/4-it} (log n)^j / j!, accumulated in
// certified double arithmetic: mid in re/im, rigorous radius in rad, and a
// positive majorant sum_{n} n^{-5/4} (log n)^j / j! in maj.
struct MomentSums {
  std::vector<double> re, im, rad, maj;
};

// cs holds interleaved (cos, sin) of n^{-it} for n < count; phase_rad is a
// uniform radius valid for every entry. Chunked in-order reduction, OpenMP
// over chunks; results are identical for any thread count.
MomentSums moment_kernel(const std::vector<double>& cs, long count, int jmax,
                         double phase_rad);
// Plain loop, kept as the reference implementation.
MomentSums moment_kernel_serial(const std::vector<double>& cs, long count,
                                int jmax, double phase_rad);

// One-shot evaluator for the closed strip |sigma - 5/4| <= 1/4 at a fixed
// height t. Builds sieved phase tables, assembles Taylor models for zeta and
// zeta' around 5/4 + it, and keeps the Dirichlet-series anchor for
// log zeta(3/2 + it). The tables are released once the models exist.
class SegmentEvaluator {
 public:
  SegmentEvaluator(const BallReal& t, const EvalConfig& cfg);

  BallComplex zeta(double sigma) const;
  BallComplex zeta_prime(double sigma) const;
  // log zeta(3/2+it) by the sieved series over prime powers, tail 2/sqrt(X).
  const BallComplex& log_zeta_anchor() const { return anchor_; }
  // log zeta(1+it) = anchor - integral of zeta'/zeta over [1, 3/2].
  BallComplex log_zeta_at_1() const;

  long cutoff() const { return n_cutoff_; }
  const TaylorModel& zeta_model() const { return zeta_tm_; }
  const TaylorModel& zeta_prime_model() const { return zeta_prime_tm_; }

 private:
  BallReal t_;
  EvalConfig cfg_;
  long prec_;
  long n_cutoff_ = 0;
  TaylorModel zeta_tm_;
  TaylorModel zeta_prime_tm_;
  BallComplex anchor_;
};

}  // namespace zetaline
