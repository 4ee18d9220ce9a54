#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "zetaline/primes.hpp"
#include "zetaline/zeta.hpp"

using namespace zetaline;

namespace {

const PrimeTable& big_table() {
  static PrimeTable t = sieve_mangoldt(10000000L);
  return t;
}

// independent enumeration of sum_{n<=x} Lambda(n)/(n^1 (log n)^beta)
BallReal enumerated_sum(unsigned long x, int beta, long prec) {
  BallReal acc = BallReal::from_long(0, prec);
  for (unsigned long n = 2; n <= x; ++n) {
    unsigned long p = oracle::mangoldt_base(n);
    if (p == 0) continue;
    if (beta == 0) {
      acc = add(acc, div_ui(BallReal::log_ui(p, prec), n, prec), prec);
    } else {
      unsigned long k = 0, q = 1;
      while (q < n) q *= p, ++k;
      acc = add(acc, ui_div(1, BallReal::from_ui(n * k, prec), prec), prec);
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("sieve marks prime powers and nothing else") {
  PrimeTable t = sieve_mangoldt(10);
  CHECK(t.limit() == 10);
  const std::set<long> expect = {2, 3, 4, 5, 7, 8, 9};
  for (long n = 2; n <= 10; ++n) {
    CHECK((t.factor_of(n).k != 0) == (expect.count(n) == 1));
  }
  PrimePower f8 = t.factor_of(8);
  CHECK(f8.p == 2);
  CHECK(f8.k == 3);
  CHECK(t.lambda(8, 192).intersects(BallReal::log_ui(2, 256)));
  CHECK(t.lambda(6, 192).rad() == 0.0);
  CHECK(t.lambda(6, 192).mid_d() == 0.0);
  CHECK_THROWS_AS(t.factor_of(1), ArgumentError);

  PrimeTable t1000 = sieve_mangoldt(1000);
  for (long n = 2; n <= 1000; ++n) {
    unsigned long base = oracle::mangoldt_base(static_cast<unsigned long>(n));
    PrimePower f = t1000.factor_of(n);
    CHECK(static_cast<unsigned long>(f.p) == base);
    if (base != 0) {
      long long q = 1;
      for (std::uint32_t i = 0; i < f.k; ++i) q *= f.p;
      CHECK(q == n);
    }
  }

  // Chebyshev psi is nondecreasing
  double psi = 0.0;
  for (long n = 2; n <= 1000; ++n) {
    double next = psi + t1000.lambda(n, 64).mid_d();
    CHECK(next >= psi);
    psi = next;
  }
}

TEST_CASE("weighted sums against direct enumeration") {
  PrimeTable t = sieve_mangoldt(1000);

  BallReal s10 = weighted_sum(t, 10, 1.0, 0, 192);
  CHECK(s10.intersects(enumerated_sum(10, 0, 256)));
  CHECK(std::abs(s10.mid_d() - 1.6946507) < 1e-4);

  BallReal half = weighted_sum(t, 2, 1.0, 1, 128);
  CHECK(half.rad() == 0.0);
  CHECK(half.mid_d() == 0.5);

  BallReal s1000 = weighted_sum(t, 1000, 1.0, 1, 192);
  CHECK(s1000.intersects(enumerated_sum(1000, 1, 256)));

  // against log zeta(3/2), tail below 1e-3
  BallReal s = weighted_sum(big_table(), 1e6, 1.5, 1, 128);
  auto z32 = zeta_with_derivative(
      BallComplex{BallReal::from_double(1.5, 128), BallReal::from_long(0, 128)},
      EvalConfig{128});
  double logz = std::log(z32.first.re.mid_d());
  CHECK(std::abs(s.mid_d() - logz) < 1e-3);
  CHECK(std::abs(s.mid_d() - 0.9602) < 1.2e-3);
  CHECK(s.mid_d() < logz);

  // nondecreasing in x
  const double xs[] = {10, 100, 1000, 31623, 1e6};
  for (int b = 0; b <= 1; ++b) {
    BallReal prev = weighted_sum(big_table(), xs[0], 1.25, b, 128);
    for (int i = 1; i < 5; ++i) {
      BallReal cur = weighted_sum(big_table(), xs[i], 1.25, b, 128);
      CHECK(sub(cur, prev).sign() != Sign::negative);
      prev = cur;
    }
  }
}

TEST_CASE("euler product rearrangement below one thousand") {
  PrimeTable t = sieve_mangoldt(1000);
  BallReal by_n = weighted_sum(t, 1000, 1.0, 1, 192);

  // prime-major double loop, independently of the table
  BallReal by_p = BallReal::from_long(0, 256);
  for (unsigned long p = 2; p <= 1000; ++p) {
    if (oracle::mangoldt_base(p) != p) continue;
    unsigned long q = p;
    for (unsigned long k = 1; q <= 1000; ++k, q *= p) {
      by_p = add(by_p, ui_div(1, BallReal::from_ui(q * k, 256), 256), 256);
      if (q > 1000 / p) break;
    }
  }
  CHECK(by_n.intersects(by_p));
  CHECK(std::abs(by_n.mid_d() - by_p.mid_d()) < 1e-40);
}

TEST_CASE("reference margins match direct enumeration at one hundred") {
  PrimeTable t = sieve_mangoldt(100);

  BallReal m_ram = reference_inequality_check(t, 100, RefIneq::ramare, 192);
  CHECK(m_ram.sign() == Sign::positive);
  BallReal lx = log_ball(BallReal::from_double(100, 256), 256);
  BallReal bound_ram =
      add(sub(lx, BallReal::euler_gamma(256), 256),
          div(div_ui(BallReal::from_ui(13, 256), 10, 256), sqr(lx, 256), 256),
          256);
  CHECK(m_ram.intersects(sub(bound_ram, enumerated_sum(100, 0, 256), 256)));

  BallReal m_ros = reference_inequality_check(t, 100, RefIneq::rosser, 192);
  CHECK(m_ros.sign() == Sign::positive);
  BallReal bound_ros = add(add(log_ball(lx, 256), BallReal::euler_gamma(256), 256),
                           ui_div(1, sqr(lx, 256), 256), 256);
  CHECK(m_ros.intersects(sub(bound_ros, enumerated_sum(100, 1, 256), 256)));
}

TEST_CASE("reference margins certified across the grid") {
  const PrimeTable& t = big_table();
  for (int j = 0; j <= 12; ++j) {
    double x = std::pow(10.0, 1.0 + 0.5 * j);
    if (x > static_cast<double>(t.limit())) x = static_cast<double>(t.limit());
    BallReal m_ram = reference_inequality_check(t, x, RefIneq::ramare, 128);
    CHECK(m_ram.sign() == Sign::positive);
    BallReal m_ros = reference_inequality_check(t, x, RefIneq::rosser, 128);
    CHECK(m_ros.sign() == Sign::positive);
  }
}

TEST_CASE("guards and coverage reporting") {
  CHECK_THROWS_AS(sieve_mangoldt(1), ArgumentError);
  CHECK_THROWS_AS(sieve_mangoldt(100000001L), ArgumentError);

  PrimeTable t = sieve_mangoldt(10);
  CHECK_THROWS_AS(weighted_sum(t, 1.5, 1.0, 0, 128), ArgumentError);
  CHECK_THROWS_AS(weighted_sum(t, 10, 0.99, 0, 128), ArgumentError);
  CHECK_THROWS_AS(weighted_sum(t, 10, 1.51, 0, 128), ArgumentError);
  CHECK_THROWS_AS(weighted_sum(t, 10, 1.0, 2, 128), ArgumentError);
  CHECK_THROWS_WITH_AS(weighted_sum(t, 1000, 1.0, 0, 128),
                       doctest::Contains("1000"), CoverageError);

  CHECK_THROWS_AS(reference_inequality_check(t, 1.0, RefIneq::ramare, 128),
                  ArgumentError);
  CHECK_THROWS_AS(reference_inequality_check(t, 50, RefIneq::rosser, 128),
                  CoverageError);
  // x in (1,2): empty sum, the bound alone decides
  BallReal m = reference_inequality_check(t, 1.5, RefIneq::ramare, 128);
  CHECK(m.sign() == Sign::positive);
}
