#pragma once

// Slow, independent reference evaluators used only by tests. Each returns a
// ball that provably contains the target value, with the truncation tail
// folded into the radius.

#include <cmath>
#include <cstdint>

#include "zetaline/ball.hpp"

namespace oracle {

using namespace zetaline;

// zeta via the alternating series eta(s) = sum (-1)^{n-1} n^{-s}, truncated
// at `terms`; pairing the tail gives
//   |tail| <= |s| (N+1)^{-sigma-1} + (|s| / (2 sigma)) (N+1)^{-sigma}.
inline BallComplex eta_zeta(const BallComplex& s, long prec, long terms) {
  const BallComplex neg_s = cneg(s);
  BallComplex sum{BallReal::from_long(0, prec), BallReal::from_long(0, prec)};
  for (long n = 1; n <= terms; ++n) {
    BallReal ln = BallReal::log_ui(static_cast<unsigned long>(n), prec);
    BallComplex term = cexp(cmul_real(neg_s, ln, prec), prec);
    sum = (n % 2 == 1) ? cadd(sum, term, prec) : csub(sum, term, prec);
  }
  const double abs_s = cabs(s, prec).upper_d();
  const double sigma = s.re.lower_d();
  const double np1 = static_cast<double>(terms + 1);
  const double tail = rd::add_up(
      rd::mul_up(abs_s, std::pow(np1, -sigma - 1) * (1 + 1e-12)),
      rd::mul_up(rd::div_up(abs_s, 2 * sigma),
                 std::pow(np1, -sigma) * (1 + 1e-12)));
  sum.re = widen(sum.re, tail);
  sum.im = widen(sum.im, tail);

  // zeta = eta / (1 - 2^{1-s})
  BallComplex one{BallReal::from_long(1, prec), BallReal::from_long(0, prec)};
  BallComplex om_s = csub(one, s, prec);
  BallComplex two_pow =
      cexp(cmul_real(om_s, BallReal::log_ui(2, prec), prec), prec);
  return cdiv(sum, csub(one, two_pow, prec), prec);
}

// von Mangoldt: log p when n = p^k, else zero ball. Trial division only.
inline unsigned long mangoldt_base(unsigned long n) {
  if (n < 2) return 0;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1 ? p : 0;
    }
  }
  return n;  // prime
}

// zeta'/zeta(s) = -sum Lambda(n) n^{-s} for sigma > 1, truncated at `limit`;
//   |tail| <= N^{1-sigma} (log N / (sigma-1) + 1/(sigma-1)^2).
inline BallComplex dirichlet_log_deriv(const BallComplex& s, long prec,
                                       long limit) {
  const double sigma = s.re.lower_d();
  if (!(sigma > 1.2)) throw ArgumentError("oracle needs sigma > 1.2");
  const BallComplex neg_s = cneg(s);
  BallComplex sum{BallReal::from_long(0, prec), BallReal::from_long(0, prec)};
  for (long n = 2; n <= limit; ++n) {
    unsigned long p = mangoldt_base(static_cast<unsigned long>(n));
    if (p == 0) continue;
    BallReal ln = BallReal::log_ui(static_cast<unsigned long>(n), prec);
    BallComplex term = cexp(cmul_real(neg_s, ln, prec), prec);
    sum = cadd(sum, cmul_real(term, BallReal::log_ui(p, prec), prec), prec);
  }
  const double nn = static_cast<double>(limit);
  const double tail =
      rd::mul_up(std::pow(nn, 1 - sigma) * (1 + 1e-12),
                 rd::add_up(rd::div_up(std::log(nn) * (1 + 1e-12), sigma - 1),
                            rd::div_up(1.0, (sigma - 1) * (sigma - 1))));
  sum = cneg(sum);
  sum.re = widen(sum.re, tail);
  sum.im = widen(sum.im, tail);
  return sum;
}

// 64-bit LCG shared by the randomized suites.
struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 16;
  }
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(next() & 0xffffffffULL) /
                             4294967295.0);
  }
};

}  // namespace oracle
