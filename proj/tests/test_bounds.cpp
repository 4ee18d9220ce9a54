#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include <zetaline/bounds.hpp>
#include <zetaline/primes.hpp>

#include "oracles.hpp"

using namespace zetaline;

namespace {

const Constants& consts() {
  static Constants c = solve_lambda0(192);
  return c;
}

// independent double-precision root of e^l (l-1) = 1
double lambda0_oracle() {
  double m = 1.3;
  for (int i = 0; i < 50; ++i)
    m -= (std::exp(m) * (m - 1.0) - 1.0) / (std::exp(m) * m);
  return m;
}

double a0_oracle() {
  double r = lambda0_oracle();
  return (1.0 + std::exp(r)) / r;
}

double e_delta_oracle(double T, double delta) {
  return (1.0 / (delta * delta) + 1.0) * std::log(T) / (2.0 * M_PI * T);
}

const double kGamma = 0.5772156649015329;

const ComparisonBound& find_bound(const std::vector<ComparisonBound>& v,
                                  const std::string& name) {
  for (const auto& b : v)
    if (b.name == name) return b;
  REQUIRE(false);
  return v.front();
}

}  // namespace

TEST_CASE("minimizer constants and the fixed point") {
  const Constants& c = consts();

  CHECK(std::abs(c.lambda0.mid_d() - lambda0_oracle()) < 1e-14);
  CHECK(c.lambda0.mid_d() > 1.2784);
  CHECK(c.lambda0.mid_d() < 1.2785);
  CHECK(c.lambda0.rad() < 1e-30);

  BallReal resid = sub_ui(
      mul(exp_ball(c.lambda0, 256), sub_ui(c.lambda0, 1, 256), 256), 1, 256);
  CHECK(resid.contains_zero());

  CHECK(std::abs(c.a0.mid_d() - a0_oracle()) < 1e-13);
  CHECK(c.a0.mid_d() > 3.5911);
  CHECK(c.a0.mid_d() < 3.5912);
  CHECK(c.a0.intersects(exp_ball(c.lambda0, 256)));

  // interior minimum of (1 + e^l)/l: nearby points sit strictly above
  for (double off : {-0.01, 0.01}) {
    BallReal l = BallReal::from_double(lambda0_oracle() + off, 192);
    BallReal v = div(add_ui(exp_ball(l, 192), 1, 192), l, 192);
    CHECK(surely_lt(c.a0, v));
  }

  CHECK(std::abs(c.euler_gamma.mid_d() - kGamma) < 1e-15);

  CHECK(c.log_zeta_32.mid_d() > 0.960);
  CHECK(c.log_zeta_32.mid_d() < 0.961);

  // prime-power partial sum sits below, within its integral tail
  PrimeTable tbl = sieve_mangoldt(1000000);
  BallReal ws = weighted_sum(tbl, 1e6, 1.5, 1, 192);
  CHECK(surely_le(ws, c.log_zeta_32));
  CHECK(c.log_zeta_32.upper_d() <= ws.lower_d() + 2.1e-3);

  Constants c64 = solve_lambda0(64);
  Constants c256 = solve_lambda0(256);
  CHECK(c64.lambda0.intersects(c256.lambda0));
  CHECK(c256.lambda0.rad() < c64.lambda0.rad());
}

TEST_CASE("tail budget closed form") {
  BallReal e = e_delta(3e12, 1e-5, 128);
  CHECK(std::abs(e.mid_d() - e_delta_oracle(3e12, 1e-5)) < 1e-14);
  CHECK(e.mid_d() > 0.01523);
  CHECK(e.mid_d() < 0.01525);

  double d = 1.0 - 1e-12;
  BallReal near_one = e_delta(M_E, d, 128);
  CHECK(std::abs(near_one.mid_d() - e_delta_oracle(M_E, d)) < 1e-14);
  CHECK(std::abs(near_one.mid_d() - 1.0 / (M_PI * M_E)) < 1e-10);

  CHECK(surely_lt(e_delta(1e10, 1e-3, 128), e_delta(1e9, 1e-3, 128)));
  double ts[] = {3.0, 10.0, 100.0, 1e6, 1e9};
  for (int i = 0; i + 1 < 5; ++i)
    CHECK(surely_lt(e_delta(ts[i + 1], 0.1, 128), e_delta(ts[i], 0.1, 128)));
  CHECK(surely_lt(e_delta(1e9, 0.9, 128), e_delta(1e9, 0.5, 128)));

  CHECK_THROWS_WITH_AS(e_delta(1.0, 0.5, 128), doctest::Contains("T > 1"),
                       ArgumentError);
  CHECK_THROWS_WITH_AS(e_delta(10.0, 0.0, 128), doctest::Contains("delta"),
                       ArgumentError);
  CHECK_THROWS_WITH_AS(e_delta(10.0, 1.0, 128), doctest::Contains("delta"),
                       ArgumentError);
}

TEST_CASE("epsilon factor shrinks across the strip") {
  double lt6 = std::log(1e6);
  double o1 = 1.0 / (lt6 / a0_oracle() - 1.0);
  BallReal e1 = epsilon_factor(1.0, 1e6, consts(), 128);
  CHECK(std::abs(e1.mid_d() - o1) < 1e-12);
  CHECK(e1.mid_d() > 0.3512);
  CHECK(e1.mid_d() < 0.3513);

  double o32 = 1.0 / (lt6 * lt6 / a0_oracle() - 1.0);
  BallReal e32 = epsilon_factor(1.5, 1e6, consts(), 128);
  CHECK(std::abs(e32.mid_d() - o32) < 1e-12);
  CHECK(e32.mid_d() > 0.0191);
  CHECK(e32.mid_d() < 0.0193);

  CHECK(surely_lt(epsilon_factor(1.0, 1e12, consts(), 128), e1));

  oracle::Lcg rng(20260819);
  BallReal one = BallReal::from_ui(1, 128);
  for (int i = 0; i < 20; ++i) {
    double alpha = rng.uniform(1.0, 1.5);
    double t = std::exp(rng.uniform(std::log(1e6), std::log(1e12)));
    CHECK(surely_le(epsilon_factor(alpha, t, consts(), 128),
                    epsilon_factor(1.0, t, consts(), 128)));
    CHECK(surely_lt(rho_sum_coefficient(alpha, t, consts(), 128), one));
  }

  BallReal lt = log_ball(BallReal::from_double(1e6, 160), 160);
  CHECK(rho_sum_coefficient(1.0, 1e6, consts(), 128)
            .intersects(div(consts().a0, lt, 160)));

  Constants smeared = consts();
  smeared.a0 = BallReal::from_mid_rad(13.8155, 0.5, 64);
  CHECK_THROWS_WITH_AS(epsilon_factor(1.0, 1e6, smeared, 64),
                       doctest::Contains("encloses zero"), UndecidedError);

  CHECK_THROWS_AS(epsilon_factor(0.9, 1e6, consts(), 128), ArgumentError);
  CHECK_THROWS_AS(epsilon_factor(1.6, 1e6, consts(), 128), ArgumentError);
  CHECK_THROWS_AS(epsilon_factor(1.0, 1e5, consts(), 128), ArgumentError);
}

TEST_CASE("general alpha bound assembled from its terms") {
  static PrimeTable tbl = sieve_mangoldt(1000);
  BoundParams params(3e12, 1e-5, 192);

  // alpha = 3/2 at t = 1e6, every term recomputed independently
  double lt6 = std::log(1e6);
  double eps_o = 1.0 / (lt6 * lt6 / a0_oracle() - 1.0);
  double lead_o = a0_oracle() / 2.0 / lt6;
  double prime_o = 0.0;
  for (unsigned long n = 2; n <= 190; ++n) {
    unsigned long p = oracle::mangoldt_base(n);
    if (p) prime_o += std::log(double(p)) / std::pow(double(n), 1.5);
  }
  double tail_o = 2.0 * e_delta_oracle(3e12, 1e-5) / lambda0_oracle();
  double oracle =
      (1.0 + eps_o) * (lead_o + prime_o + tail_o + 3.2 / (1e6 * 1e6));

  BallReal b32 = general_alpha_bound(1.5, 1e6, params, consts(), tbl, 192);
  CHECK(std::abs(b32.mid_d() - oracle) < 1e-10);

  // alpha = 1 collapse: same assembly with the plain Lambda(n)/n sum
  BallReal b1 = general_alpha_bound(1.0, 1e6, params, consts(), tbl, 192);
  BallReal manual = mul(
      add_ui(epsilon_factor(1.0, 1e6, consts(), 192), 1, 192),
      add(add(add(div_ui(consts().a0, 2, 192),
                  weighted_sum(tbl, 190.9, 1.0, 0, 192), 192),
              div(params.e_delta, consts().lambda0, 192), 192),
          div(div(BallReal::from_ui(32, 192), BallReal::from_ui(10, 192),
                  192),
              sqr(BallReal::from_double(1e6, 192), 192), 192), 192), 192);
  CHECK(b1.intersects(manual));

  // a smaller tail budget shrinks the bound
  BoundParams leaner(3e12, 1e-4, 192);
  CHECK(surely_lt(e_delta(3e12, 1e-4, 128), e_delta(3e12, 1e-5, 128)));
  CHECK(surely_lt(general_alpha_bound(1.0, 1e6, leaner, consts(), tbl, 192),
                  b1));

  CHECK_THROWS_AS(general_alpha_bound(0.99, 1e6, params, consts(), tbl, 128),
                  ArgumentError);
  CHECK_THROWS_WITH_AS(
      general_alpha_bound(1.0, 1e5, params, consts(), tbl, 128),
      doctest::Contains("t >= 1e6"), ArgumentError);
  CHECK_THROWS_WITH_AS(
      general_alpha_bound(1.0, 2.999971e12, params, consts(), tbl, 128),
      doctest::Contains("(1-delta)*T"), ArgumentError);

  PrimeTable tiny = sieve_mangoldt(100);
  CHECK_THROWS_AS(general_alpha_bound(1.0, 1e6, params, consts(), tiny, 128),
                  CoverageError);
}

TEST_CASE("packaged theorem bounds and the log-height caps") {
  BoundParams params(3e12, 1e-5, 192);
  TheoremBounds tb = theorem_bounds(1e6, params, 192);

  double E = e_delta_oracle(3e12, 1e-5);
  double llt = std::log(std::log(1e6));
  double lllt = std::log(llt);

  double ld_o = 2.0 * llt + 1.219 + 16.108 / (llt * llt) + 1.057 * E;
  CHECK(std::abs(tb.logderiv.mid_d() - ld_o) < 1e-12);
  CHECK(tb.logderiv.mid_d() > 8.822);
  CHECK(tb.logderiv.mid_d() < 8.824);

  double lz_o = lllt + std::log(2.0) + kGamma + 3.404 / llt + 0.793 * E;
  CHECK(std::abs(tb.log_zeta.mid_d() - lz_o) < 1e-12);

  double iv_o = 2.0 * std::exp(kGamma) * (llt + 3.404 + 9.378 / llt) *
                std::exp(0.793 * E);
  CHECK(std::abs(tb.inv_zeta.mid_d() - iv_o) < 1e-11);
  CHECK(tb.inv_zeta.mid_d() > 34.61);
  CHECK(tb.inv_zeta.mid_d() < 34.63);

  CHECK(tb.zeta.mid_d() == tb.inv_zeta.mid_d());
  CHECK(tb.zeta.rad() == tb.inv_zeta.rad());

  // both log-height caps clear the packaged values at t = 1e6
  BallReal lt = log_ball(BallReal::from_double(1e6, 208), 208);
  BallReal c639 = mul(div(BallReal::from_ui(639, 208),
                          BallReal::from_ui(1000, 208), 208), lt, 208);
  BallReal c2506 = mul(div(BallReal::from_ui(2506, 208),
                           BallReal::from_ui(1000, 208), 208), lt, 208);
  CHECK(surely_le(tb.logderiv, c639));
  CHECK(surely_le(tb.inv_zeta, c2506));
  CHECK(c2506.mid_d() - tb.inv_zeta.mid_d() < 0.005);  // nearly saturated

  BoundParams lim = BoundParams::rh_limit(160);
  CHECK(lim.limit);
  CHECK(lim.e_delta.is_exact());
  CHECK(lim.e_delta.mid_d() == 0.0);
  TheoremBounds far = theorem_bounds(1e15, lim, 160);
  double llt15 = std::log(std::log(1e15));
  CHECK(std::abs(far.logderiv.mid_d() -
                 (2.0 * llt15 + 1.219 + 16.108 / (llt15 * llt15))) < 1e-12);

  std::vector<double> grid;
  for (int i = 0; i < 120; ++i)
    grid.push_back(std::exp(std::log(1e6) +
                            (std::log(1e12) - std::log(1e6)) * i / 119.0));
  grid.front() = 1e6;
  grid.back() = 1e12;
  double prev = 0.0;
  for (double t : grid) {
    double v = theorem_bounds(t, params, 128).logderiv.mid_d();
    CHECK(v >= prev);
    prev = v;
  }

  CHECK_THROWS_WITH_AS(theorem_bounds(999999.0, params, 128),
                       doctest::Contains("t >= 1e6"), ArgumentError);
  CHECK_THROWS_WITH_AS(theorem_bounds(2.9999701e12, params, 128),
                       doctest::Contains("(1-delta)*T"), ArgumentError);
  CHECK_THROWS_AS(BoundParams(1e8, 0.5, 128), ArgumentError);
}

TEST_CASE("literature comparison values and windows") {
  auto cb = comparison_bounds(1e6, 128);
  CHECK(cb.size() == 7);

  double lt6 = std::log(1e6);
  const auto& patel = find_bound(cb, "zeta_unconditional");
  CHECK(std::abs(patel.value.mid_d() - (lt6 / 2.0 + 1.93)) < 1e-9);
  CHECK(patel.in_window);

  const auto& trud = find_bound(cb, "logderiv_unconditional");
  CHECK(std::abs(trud.value.mid_d() - 40.14 * lt6) < 1e-9);
  CHECK(trud.value.mid_d() > 554.5);
  CHECK(trud.value.mid_d() < 554.6);
  CHECK(trud.in_window);

  CHECK(std::abs(find_bound(cb, "inv_zeta_unconditional").value.mid_d() -
                 42.9 * lt6) < 1e-9);

  CHECK(find_bound(cb, "logderiv_partial_rh").in_window);
  CHECK(find_bound(cb, "inv_zeta_partial_rh").in_window);
  CHECK(std::abs(find_bound(cb, "logderiv_partial_rh").value.mid_d() -
                 0.639 * lt6) < 1e-9);
  CHECK(!find_bound(cb, "inv_zeta_rh").in_window);
  CHECK(!find_bound(cb, "logderiv_rh").in_window);

  auto low = comparison_bounds(1e5, 128);
  CHECK(!find_bound(low, "logderiv_partial_rh").in_window);
  auto high = comparison_bounds(3e12, 128);
  CHECK(!find_bound(high, "logderiv_partial_rh").in_window);
  CHECK(find_bound(high, "inv_zeta_rh").in_window);

  auto edge = comparison_bounds(133.0, 128);
  CHECK(find_bound(edge, "logderiv_unconditional").in_window);
  CHECK(find_bound(edge, "inv_zeta_unconditional").in_window);
  auto below = comparison_bounds(132.9, 128);
  CHECK(!find_bound(below, "logderiv_unconditional").in_window);

  double llt10 = std::log(std::log(1e10));
  double lls_o = 12.0 * std::exp(kGamma) / (M_PI * M_PI) *
                 (llt10 - std::log(2.0) + 0.5 + 1.0 / llt10 +
                  14.0 * llt10 / std::log(1e10));
  auto at10 = comparison_bounds(1e10, 128);
  CHECK(std::abs(find_bound(at10, "inv_zeta_rh").value.mid_d() - lls_o) <
        1e-9);
  CHECK(find_bound(at10, "inv_zeta_rh").in_window);

  double lt30 = std::log(1e30);
  double llt30 = std::log(lt30);
  double csv_o = 2.0 * llt30 - 0.4989 + 5.35 * llt30 * llt30 / lt30;
  auto at30 = comparison_bounds(1e30, 128);
  CHECK(std::abs(find_bound(at30, "logderiv_rh").value.mid_d() - csv_o) <
        1e-9);
  CHECK(find_bound(at30, "logderiv_rh").in_window);

  CHECK_THROWS_AS(comparison_bounds(2.9, 128), ArgumentError);
}

TEST_CASE("audit certifies the packaging") {
  BoundParams params(3e12, 1e-5, 160);

  AuditReport rep = audit_constants(params, consts(), {}, 160);
  CHECK(rep.passed);
  CHECK(rep.failures.empty());
  CHECK(rep.checks.size() == 4);

  // the scalar dominations, and how thin their margins are
  BallReal eps1 = epsilon_factor(1.0, 1e6, consts(), 160);
  BallReal v1 = div(add_ui(eps1, 1, 160), consts().lambda0, 160);
  CHECK(v1.mid_d() > 1.0569);
  CHECK(v1.mid_d() < 1.0570);
  BallReal v2 = div(mul_ui(add_ui(eps1, 1, 160), 3, 160),
                    mul_ui(consts().lambda0, 4, 160), 160);
  CHECK(v2.mid_d() > 0.7926);
  CHECK(v2.mid_d() < 0.7928);
  double quad = 0.8093 * 3.404 * 3.404;
  CHECK(quad > 9.3775);
  CHECK(quad < 9.378);

  // packaging is nearly sharp at the low corner
  TheoremBounds tb = theorem_bounds(1e6, params, 160);
  double ld_margin =
      tb.logderiv.mid_d() -
      raw_logderiv_assembly(1e6, params, consts(), 160).mid_d();
  CHECK(ld_margin > 2e-4);
  CHECK(ld_margin < 2e-3);
  double lz_margin =
      tb.log_zeta.mid_d() -
      raw_log_zeta_assembly(1e6, params, consts(), 160).mid_d();
  CHECK(lz_margin > 2e-5);
  CHECK(lz_margin < 4e-4);

  std::vector<double> small_grid = {1e6, 3e9, 1e12};
  CHECK(audit_constants(params, consts(), small_grid, 128).passed);

  // corrupted constants must be caught and located
  Constants bogus = consts();
  bogus.a0 = BallReal::from_double(10.0, 160);
  bogus.lambda0 = BallReal::from_double(0.5, 160);
  AuditReport broken = audit_constants(params, bogus, {1e6, 1e8}, 160);
  CHECK(!broken.passed);
  REQUIRE(!broken.failures.empty());
  CHECK(broken.failures.front().find("step (i)") != std::string::npos);
  CHECK(broken.failures.front().find("t=") != std::string::npos);

  std::vector<double> out_of_range = {1e5};
  CHECK_THROWS_AS(audit_constants(params, consts(), out_of_range, 128),
                  ArgumentError);
}
