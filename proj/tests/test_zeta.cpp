#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "zetaline/segment.hpp"
#include "zetaline/zeta.hpp"

using namespace zetaline;

namespace {

BallComplex point(double re, double im, long prec) {
  return BallComplex{BallReal::from_double(re, prec),
                     BallReal::from_double(im, prec)};
}

}  // namespace

TEST_CASE("bernoulli coefficients") {
  long prec = 128;
  CHECK(bernoulli_over_factorial(2, prec)
            .contains(div(BallReal::from_long(1, prec),
                          BallReal::from_long(12, prec), prec)));
  CHECK(bernoulli_over_factorial(4, prec)
            .contains(div(BallReal::from_long(-1, prec),
                          BallReal::from_long(720, prec), prec)));
  // B_12/12! = -691/2730 / 479001600
  BallReal b12 = div(div(BallReal::from_long(-691, prec),
                         BallReal::from_long(2730, prec), prec),
                     BallReal::from_long(479001600, prec), prec);
  CHECK(bernoulli_over_factorial(12, prec).intersects(b12));
  CHECK(bernoulli_over_factorial(12, prec).sign() == Sign::negative);
}

TEST_CASE("zeta at small integers") {
  EvalConfig cfg;
  cfg.prec = 192;
  auto [z2, z2d] = zeta_with_derivative(point(2.0, 0.0, cfg.prec), cfg);
  BallReal pi = BallReal::pi(cfg.prec);
  BallReal target = div_ui(sqr(pi, cfg.prec), 6, cfg.prec);
  CHECK(z2.re.intersects(target));
  CHECK(z2.im.contains_si(0));
  CHECK(z2.re.rad() < 1e-38);

  auto [z3, z3d] = zeta_with_derivative(point(3.0, 0.0, cfg.prec), cfg);
  BallReal apery = BallReal::from_decimal(
      "1.2020569031595942853997381615114499907649862923405", cfg.prec);
  CHECK(z3.re.intersects(apery));

  // zeta'(2), classical value.
  BallReal zp2 = BallReal::from_decimal(
      "-0.93754825431584375370257409456786497789786028861483", cfg.prec);
  CHECK(z2d.re.intersects(zp2));
  CHECK(z2d.im.contains_si(0));
  (void)z3d;
}

TEST_CASE("zeta against the alternating series") {
  EvalConfig cfg;
  cfg.prec = 160;
  struct Pt {
    double re, im;
  } pts[] = {{1.5, 0.0}, {1.0, 100.0}, {0.5, 20.0}, {1.25, 3333.0}};
  for (const auto& p : pts) {
    BallComplex s = point(p.re, p.im, cfg.prec);
    auto [z, zd] = zeta_with_derivative(s, cfg);
    long terms = std::max<long>(4000, 30 * static_cast<long>(
                                          std::ceil(std::hypot(p.re, p.im))));
    BallComplex ref = oracle::eta_zeta(s, cfg.prec, terms);
    INFO("s = ", p.re, " + ", p.im, "i");
    CHECK(z.intersects(ref));
    CHECK(cabs(ref, cfg.prec).upper_d() < 1e6);
    (void)zd;
  }
}

TEST_CASE("log derivative against the Dirichlet series") {
  EvalConfig cfg;
  cfg.prec = 160;
  struct Pt {
    double re, im;
  } pts[] = {{2.0, 0.0}, {3.0, 0.0}, {2.0, 5.0}, {2.5, 41.5}};
  for (const auto& p : pts) {
    BallComplex s = point(p.re, p.im, cfg.prec);
    BallComplex ld = log_deriv(s, cfg);
    BallComplex ref = oracle::dirichlet_log_deriv(s, cfg.prec, 20000);
    INFO("s = ", p.re, " + ", p.im, "i");
    CHECK(ld.intersects(ref));
  }
}

TEST_CASE("zeta prime via the Dirichlet product") {
  EvalConfig cfg;
  cfg.prec = 160;
  for (double sigma : {2.0, 3.0}) {
    BallComplex s = point(sigma, 0.0, cfg.prec);
    auto [z, zd] = zeta_with_derivative(s, cfg);
    BallComplex ld = oracle::dirichlet_log_deriv(s, cfg.prec, 20000);
    CHECK(zd.intersects(cmul(z, ld, cfg.prec)));
  }
}

TEST_CASE("random sample against the oracle") {
  oracle::Lcg rng(0x5eedbeefULL);
  EvalConfig cfg;
  cfg.prec = 128;
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    double re = rng.uniform(1.0, 1.5);
    double im = std::pow(10.0, rng.uniform(1.0, 4.0));
    BallComplex s = point(re, im, cfg.prec);
    auto [z, zd] = zeta_with_derivative(s, cfg);
    long terms = 20 * static_cast<long>(std::ceil(im));
    BallComplex ref = oracle::eta_zeta(s, cfg.prec, terms);
    INFO("i = ", i, " s = ", re, " + ", im, "i");
    REQUIRE(z.is_finite());
    CHECK(z.intersects(ref));
    // The reference ball is tail-dominated; the evaluator should be far
    // tighter than it.
    CHECK(z.re.rad() < ref.re.rad() + 1e-20);
    ++checked;
    (void)zd;
  }
  CHECK(checked == 60);
}

TEST_CASE("refinement across configurations") {
  BallComplex s = point(1.25, 250.25, 128);
  EvalConfig a;
  a.prec = 128;
  a.em_terms = 600;
  a.em_order = 8;
  EvalConfig b;
  b.prec = 128;
  b.em_terms = 1500;
  b.em_order = 12;
  EvalConfig c;
  c.prec = 320;
  c.em_terms = 3000;
  c.em_order = 20;
  auto [za, zad] = zeta_with_derivative(s, a);
  auto [zb, zbd] = zeta_with_derivative(s, b);
  auto [zc, zcd] = zeta_with_derivative(point(1.25, 250.25, 320), c);
  CHECK(za.intersects(zb));
  CHECK(zb.intersects(zc));
  CHECK(za.intersects(zc));
  CHECK(zad.intersects(zbd));
  CHECK(zbd.intersects(zcd));
  CHECK(zc.re.rad() < za.re.rad());
  CHECK(zc.re.rad() < 1e-60);
}

TEST_CASE("pole and configuration errors") {
  EvalConfig cfg;
  CHECK_THROWS_AS(zeta_with_derivative(point(1.0, 0.0, 128), cfg), PoleError);
  BallComplex near_one{BallReal::from_mid_rad(1.0, 0.25, 128),
                       BallReal::from_mid_rad(0.0, 0.25, 128)};
  CHECK_THROWS_AS(zeta_with_derivative(near_one, cfg), PoleError);
  // Off the pole but close: fine.
  CHECK_NOTHROW(zeta_with_derivative(point(1.0, 0.6, 128), cfg));

  EvalConfig bad;
  bad.em_terms = 10;
  CHECK_THROWS_AS(zeta_with_derivative(point(1.0, 500.0, 128), bad),
                  ConfigError);
  EvalConfig bad2;
  bad2.em_order = 0;
  CHECK_THROWS_AS(zeta_with_derivative(point(2.0, 0.0, 128), bad2),
                  ConfigError);
}

TEST_CASE("log derivative undecided at a forced-wide zero") {
  // First zeta zero is near 0.5 + 14.1347i; at eight bits the enclosure
  // cannot separate from zero.
  EvalConfig cfg;
  cfg.prec = 8;
  BallComplex s = point(0.5, 14.134725141734693, 8);
  CHECK_THROWS_AS(log_deriv(s, cfg), UndecidedError);
  // Same point with real precision works.
  EvalConfig fine;
  fine.prec = 192;
  CHECK_NOTHROW(log_deriv(point(0.5, 14.25, 192), fine));
}

TEST_CASE("digamma at classical points") {
  long prec = 192;
  BallReal gamma = BallReal::euler_gamma(prec);
  BallComplex d1 = digamma(point(1.0, 0.0, prec));
  CHECK(d1.re.intersects(neg(gamma)));
  CHECK(d1.im.contains_si(0));
  CHECK(d1.re.rad() < 1e-5);

  BallComplex d2 = digamma(point(2.0, 0.0, prec));
  CHECK(d2.re.intersects(sub(BallReal::from_long(1, prec), gamma, prec)));

  // psi(1/2) = -gamma - 2 log 2
  BallComplex dh = digamma(point(0.5, 0.0, prec));
  BallReal target = neg(add(gamma, mul_ui(BallReal::log_ui(2, prec), 2, prec),
                            prec));
  CHECK(dh.re.intersects(target));
}

TEST_CASE("digamma recurrence and poles") {
  long prec = 160;
  oracle::Lcg rng(0xd16a77aULL);
  for (int i = 0; i < 40; ++i) {
    double re = rng.uniform(-5.5, 6.0);
    double im = rng.uniform(0.1, 9.0);
    BallComplex z = point(re, im, prec);
    BallComplex lhs = digamma(z);
    // psi(z) = psi(z + 16) - sum_{k<16} 1/(z+k)
    BallComplex shifted = digamma(
        cadd(z, BallComplex::from_real(BallReal::from_long(16, prec)), prec));
    BallComplex acc{BallReal::from_long(0, prec), BallReal::from_long(0, prec)};
    BallComplex one = BallComplex::from_real(BallReal::from_long(1, prec));
    for (int k = 0; k < 16; ++k) {
      BallComplex zk = cadd(
          z, BallComplex::from_real(BallReal::from_long(k, prec)), prec);
      acc = cadd(acc, cdiv(one, zk, prec), prec);
    }
    INFO("z = ", re, " + ", im, "i");
    CHECK(lhs.intersects(csub(shifted, acc, prec)));
  }

  CHECK_THROWS_AS(digamma(point(0.0, 0.0, prec)), PoleError);
  CHECK_THROWS_AS(digamma(point(-3.0, 0.0, prec)), PoleError);
  CHECK_THROWS_AS(
      digamma(BallComplex{BallReal::from_mid_rad(-2.9, 0.2, prec),
                          BallReal::from_mid_rad(0.0, 0.05, prec)}),
      PoleError);
  CHECK_NOTHROW(digamma(point(-2.5, 0.0, prec)));
}

TEST_CASE("log derivative magnitude cap on the 3/2 line") {
  // |zeta'/zeta(3/2+it)| <= sum Lambda(n) n^{-3/2}; the constant comes from
  // a sieved sum with a Chebyshev tail (psi(x) < 1.03883 x).
  long prec = 128;
  const long X = 200000;
  BallReal cap = BallReal::from_long(0, prec);
  for (long n = 2; n <= X; ++n) {
    unsigned long p = oracle::mangoldt_base(static_cast<unsigned long>(n));
    if (p == 0) continue;
    BallReal w = exp_ball(mul(BallReal::from_double(-1.5, prec),
                              BallReal::log_ui(static_cast<unsigned long>(n), prec),
                              prec), prec);
    cap = add(cap, mul(w, BallReal::log_ui(p, prec), prec), prec);
  }
  cap = widen(cap, 3.117 / std::sqrt(static_cast<double>(X)));
  CHECK(cap.mid_d() == doctest::Approx(1.5055).epsilon(1e-2));

  EvalConfig cfg;
  cfg.prec = 128;
  oracle::Lcg rng(0xabcdefULL);
  for (int i = 0; i < 10; ++i) {
    double t = rng.uniform(10.0, 5000.0);
    BallComplex ld = log_deriv(
        BallComplex{BallReal::from_double(1.5, cfg.prec),
                    BallReal::from_double(t, cfg.prec)}, cfg);
    CHECK(surely_le(cabs(ld, cfg.prec), cap));
  }
}

TEST_CASE("moment kernels agree") {
  // Synthetic phase table, serial vs chunked-parallel reduction.
  const long n = 300000;
  std::vector<double> cs(static_cast<size_t>(2 * n));
  oracle::Lcg rng(0x71e5ULL);
  for (long i = 1; i < n; ++i) {
    double th = rng.uniform(0.0, 6.283185307179586);
    cs[static_cast<size_t>(2 * i)] = std::cos(th);
    cs[static_cast<size_t>(2 * i + 1)] = std::sin(th);
  }
  MomentSums a = moment_kernel_serial(cs, n, 26, 1e-15);
  MomentSums b = moment_kernel(cs, n, 26, 1e-15);
  for (int j = 0; j <= 26; ++j) {
    size_t k = static_cast<size_t>(j);
    INFO("moment ", j);
    CHECK(std::abs(a.re[k] - b.re[k]) <= a.rad[k] + b.rad[k]);
    CHECK(std::abs(a.im[k] - b.im[k]) <= a.rad[k] + b.rad[k]);
    CHECK(a.maj[k] == doctest::Approx(b.maj[k]).epsilon(1e-12));
    CHECK(b.rad[k] < 2.0 * a.rad[k] + 1e-30);
  }
}

TEST_CASE("segment models against direct evaluation") {
  EvalConfig cfg;
  cfg.prec = 160;
  BallReal t = BallReal::from_double(1000.0, cfg.prec);
  SegmentEvaluator ev(t, cfg);
  for (double sigma : {1.0, 1.1875, 1.5}) {
    BallComplex s{BallReal::from_double(sigma, cfg.prec), t};
    auto [zr, zdr] = zeta_with_derivative(s, cfg);
    INFO("sigma = ", sigma);
    CHECK(ev.zeta(sigma).intersects(zr));
    CHECK(ev.zeta_prime(sigma).intersects(zdr));
    CHECK(ev.zeta(sigma).re.rad() < 1e-9);
  }
  // Anchor against the model's own log at 3/2.
  BallComplex z32 = ev.zeta(1.5);
  CHECK(ev.log_zeta_anchor().intersects(clog(z32, cfg.prec)));
}

TEST_CASE("log zeta on the one-line, cross checks") {
  EvalConfig cfg;
  cfg.prec = 128;
  for (double t : {100.0, 1e4, 1e6}) {
    BallReal tb = BallReal::from_double(t, cfg.prec);
    BallComplex L = log_zeta_one_line(tb, cfg);
    BallComplex s{BallReal::from_double(1.0, cfg.prec), tb};
    auto [z, zd] = zeta_with_derivative(s, cfg);
    INFO("t = ", t);
    CHECK(cexp(L, cfg.prec).intersects(z));
    (void)zd;
  }
  // Norm inequality at t=100.
  BallComplex L = log_zeta_one_line(BallReal::from_double(100.0, cfg.prec), cfg);
  CHECK(abs_ball(L.im).upper_d() <= cabs(L, cfg.prec).upper_d());
}

TEST_CASE("log zeta random heights against exp cross-oracle") {
  EvalConfig cfg;
  cfg.prec = 128;
  oracle::Lcg rng(0x10e55ULL);
  for (int i = 0; i < 50; ++i) {
    double t = std::pow(10.0, rng.uniform(2.0, 6.0));
    BallReal tb = BallReal::from_double(t, cfg.prec);
    BallComplex L = log_zeta_one_line(tb, cfg);
    auto [z, zd] = zeta_with_derivative(
        BallComplex{BallReal::from_double(1.0, cfg.prec), tb}, cfg);
    INFO("i = ", i, " t = ", t);
    CHECK(cexp(L, cfg.prec).intersects(z));
    (void)zd;
  }
}

TEST_CASE("segment guards and starved precision") {
  EvalConfig cfg;
  CHECK_THROWS_AS(SegmentEvaluator(BallReal::from_double(5.0, 128), cfg),
                  ArgumentError);
  CHECK_THROWS_AS(SegmentEvaluator(BallReal::from_double(2e7, 128), cfg),
                  ConfigError);
  EvalConfig starved;
  starved.prec = 16;
  CHECK_THROWS_AS(
      log_zeta_one_line(BallReal::from_double(1e4, 16), starved),
      UndecidedError);
}
