#pragma once

#include <cstdint>
#include <vector>

#include "zetaline/ball.hpp"

namespace zetaline {

// One prime power n = p^k. Entries with k = 0 never appear in the table;
// factor_of returns k = 0 to signal "not a prime power".
struct PrimePower {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  std::uint32_t k = 0;
};

// von Mangoldt support up to limit, exact combinatorics; Lambda values are
// materialized as balls of log p only at the requested precision.
class PrimeTable {
 public:
  PrimeTable(long limit, std::vector<PrimePower> powers)
      : limit_(limit), powers_(std::move(powers)) {}

  long limit() const { return limit_; }
  const std::vector<PrimePower>& powers() const { return powers_; }

  PrimePower factor_of(long n) const;
  // Lambda(n): log p as a ball, or an exact zero.
  BallReal lambda(long n, long prec = kDefaultPrec) const;

 private:
  long limit_;
  std::vector<PrimePower> powers_;  // sorted by n
};

PrimeTable sieve_mangoldt(long limit);

// sum_{n<=x} Lambda(n) / (n^alpha (log n)^beta); beta in {0,1},
// alpha in [1, 3/2]. For beta=1 the log p cancels, so single representable
// terms stay exact (x=2, alpha=1 gives exactly 1/2).
BallReal weighted_sum(const PrimeTable& table, double x, double alpha,
                      int beta, long prec = kDefaultPrec);

enum class RefIneq { ramare, rosser };

// margin = literature bound - sieved sum, with a certified sign:
//   ramare:  log x - gamma + 1.3/log^2 x  vs  sum Lambda(n)/n
//   rosser:  log log x + gamma + 1/log^2 x  vs  sum Lambda(n)/(n log n)
BallReal reference_inequality_check(const PrimeTable& table, double x,
                                    RefIneq which, long prec = kDefaultPrec);

}  // namespace zetaline
