#include "zetaline/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace zetaline {

namespace {

constexpr long kMaxSieveLimit = 100000000L;

}  // namespace

PrimeTable sieve_mangoldt(long limit) {
  if (limit < 2) throw ArgumentError("sieve limit must be at least 2");
  if (limit > kMaxSieveLimit)
    throw ArgumentError("sieve limit above " + std::to_string(kMaxSieveLimit) +
                        " is not supported");

  // Linear smallest-prime-factor sieve.
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> primes;
  for (long i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t q : primes) {
      if (q > spf[i] || q * static_cast<long long>(i) > limit) break;
      spf[q * static_cast<std::size_t>(i)] = q;
    }
  }
  spf.clear();
  spf.shrink_to_fit();

  std::vector<PrimePower> powers;
  powers.reserve(primes.size() + primes.size() / 64);
  for (std::uint32_t p : primes) {
    long long q = p;
    for (std::uint32_t k = 1; q <= limit; ++k, q *= p) {
      powers.push_back({static_cast<std::uint32_t>(q), p, k});
    }
  }
  std::sort(powers.begin(), powers.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.n < b.n; });
  return PrimeTable(limit, std::move(powers));
}

PrimePower PrimeTable::factor_of(long n) const {
  if (n < 2 || n > limit_)
    throw ArgumentError("factor_of: n outside [2, limit]");
  auto it = std::lower_bound(
      powers_.begin(), powers_.end(), n,
      [](const PrimePower& e, long v) { return static_cast<long>(e.n) < v; });
  if (it != powers_.end() && static_cast<long>(it->n) == n) return *it;
  return PrimePower{static_cast<std::uint32_t>(n), 0, 0};
}

BallReal PrimeTable::lambda(long n, long prec) const {
  const PrimePower f = factor_of(n);
  if (f.k == 0) return BallReal::from_long(0, BallReal::clamp_prec(prec));
  return BallReal::log_ui(f.p, prec);
}

BallReal weighted_sum(const PrimeTable& table, double x, double alpha,
                      int beta, long prec) {
  if (!(x >= 2.0)) throw ArgumentError("weighted_sum: x must be at least 2");
  if (!(alpha >= 1.0 && alpha <= 1.5))
    throw ArgumentError("weighted_sum: alpha must lie in [1, 3/2]");
  if (beta != 0 && beta != 1)
    throw ArgumentError("weighted_sum: beta must be 0 or 1");
  if (x > static_cast<double>(table.limit()))
    throw CoverageError("weighted_sum: x exceeds sieve limit " +
                        std::to_string(table.limit()) +
                        "; need a table sieved to at least " +
                        std::to_string(static_cast<long>(std::ceil(x))));

  const long p = BallReal::clamp_prec(prec);
  const BallReal alpha_b = BallReal::from_double(alpha, p);
  BallReal acc = BallReal::from_long(0, p);
  for (const PrimePower& e : table.powers()) {
    if (static_cast<double>(e.n) > x) break;
    BallReal npow = (alpha == 1.0)
                        ? BallReal::from_ui(e.n, p)
                        : exp_ball(mul(alpha_b, BallReal::log_ui(e.n, p), p), p);
    BallReal term = (beta == 1)
                        ? ui_div(1, mul_ui(npow, e.k, p), p)
                        : div(BallReal::log_ui(e.p, p), npow, p);
    acc = add(acc, term, p);
  }
  return acc;
}

BallReal reference_inequality_check(const PrimeTable& table, double x,
                                    RefIneq which, long prec) {
  if (!(x > 1.0))
    throw ArgumentError("reference_inequality_check: x must exceed 1");
  if (x > static_cast<double>(table.limit()))
    throw CoverageError("reference_inequality_check: x exceeds sieve limit " +
                        std::to_string(table.limit()) +
                        "; need a table sieved to at least " +
                        std::to_string(static_cast<long>(std::ceil(x))));

  const long p = BallReal::clamp_prec(prec);
  const int beta = (which == RefIneq::ramare) ? 0 : 1;
  const BallReal sum = (x < 2.0) ? BallReal::from_long(0, p)
                                 : weighted_sum(table, x, 1.0, beta, p);

  const BallReal lx = log_ball(BallReal::from_double(x, p), p);
  const BallReal inv_lx2 = ui_div(1, sqr(lx, p), p);
  const BallReal gamma = BallReal::euler_gamma(p);
  BallReal bound;
  if (which == RefIneq::ramare) {
    const BallReal c = div_ui(BallReal::from_ui(13, p), 10, p);
    bound = add(sub(lx, gamma, p), mul(c, inv_lx2, p), p);
  } else {
    bound = add(add(log_ball(lx, p), gamma, p), inv_lx2, p);
  }
  BallReal margin = sub(bound, sum, p);
  if (margin.sign() == Sign::undecided)
    throw UndecidedError(
        "reference_inequality_check: margin straddles zero; increase prec");
  return margin;
}

}  // namespace zetaline
