#include "zetaline/bounds.hpp"

#include <cmath>
#include <limits>

#include "zetaline/zeta.hpp"

namespace zetaline {

namespace {

BallReal ratio(unsigned long num, unsigned long den, long prec) {
  return div(BallReal::from_ui(num, prec), BallReal::from_ui(den, prec), prec);
}

// f(l) = e^l (l - 1) - 1, increasing past 1.
BallReal lambda_residual(const BallReal& l, long prec) {
  return sub_ui(mul(exp_ball(l, prec), sub_ui(l, 1, prec), prec), 1, prec);
}

void check_theorem_range(double t, const BoundParams& params,
                         const char* who) {
  if (!(t >= 1e6))
    throw ArgumentError(std::string(who) + ": requires t >= 1e6");
  if (!params.limit && !(t <= (1.0 - params.delta) * params.T))
    throw ArgumentError(std::string(who) + ": requires t <= (1-delta)*T");
}

BallReal min_ball(const BallReal& a, const BallReal& b, long prec) {
  if (surely_le(a, b)) return a;
  if (surely_le(b, a)) return b;
  return hull(a, b, prec);
}

}  // namespace

Constants solve_lambda0(long prec) {
  long p = BallReal::clamp_prec(prec);
  long pw = p + 64;

  double m = 1.25;
  for (int i = 0; i < 8; ++i) {
    double f = std::exp(m) * (m - 1.0) - 1.0;
    m -= f / (std::exp(m) * m);
  }

  BallReal x = BallReal::from_double(m, pw);
  for (int i = 0; i < 6; ++i) {
    BallReal step =
        div(lambda_residual(x, pw), mul(exp_ball(x, pw), x, pw), pw);
    x = sub(x, step, pw);
  }

  // Certify by a sign change across a symmetric bracket; the residual is
  // increasing here, so negative-left positive-right pins the root inside.
  BallReal root;
  double eps = std::ldexp(1.0, -static_cast<int>(p) - 8);
  bool certified = false;
  for (int attempt = 0; attempt < 8 && !certified; ++attempt, eps *= 1024.0) {
    BallReal wide = widen(x, eps);
    mpfr_t lo, hi;
    mpfr_init2(lo, pw);
    mpfr_init2(hi, pw);
    wide.lower(lo);
    wide.upper(hi);
    BallReal lo_b = BallReal::from_endpoints(lo, lo, pw);
    BallReal hi_b = BallReal::from_endpoints(hi, hi, pw);
    if (lambda_residual(lo_b, pw).is_negative() &&
        lambda_residual(hi_b, pw).is_positive()) {
      root = BallReal::from_endpoints(lo, hi, p);
      certified = true;
    }
    mpfr_clear(lo);
    mpfr_clear(hi);
  }
  if (!certified)
    throw UndecidedError("solve_lambda0: sign bracket did not certify");

  Constants c;
  c.lambda0 = root;
  c.a0 = div(add_ui(exp_ball(root, pw), 1, pw), root, p);
  c.euler_gamma = BallReal::euler_gamma(p);

  EvalConfig cfg;
  cfg.prec = pw;
  BallComplex z32 = zeta_with_derivative(
      BallComplex(BallReal::from_double(1.5, pw), BallReal::from_ui(0, pw)),
      cfg).first;
  c.log_zeta_32 = log_ball(z32.re, p);
  return c;
}

BallReal e_delta(double T, double delta, long prec) {
  if (!(T > 1.0)) throw ArgumentError("e_delta: requires T > 1");
  if (!(delta > 0.0 && delta < 1.0))
    throw ArgumentError("e_delta: requires delta in (0,1)");
  long p = BallReal::clamp_prec(prec);
  long pw = p + 16;
  BallReal d = BallReal::from_double(delta, pw);
  BallReal Tb = BallReal::from_double(T, pw);
  BallReal fac = add_ui(ui_div(1, sqr(d, pw), pw), 1, pw);
  BallReal den = mul(mul_ui(BallReal::pi(pw), 2, pw), Tb, pw);
  return div(mul(fac, log_ball(Tb, pw), pw), den, p);
}

BoundParams::BoundParams(double T_in, double delta_in, long prec)
    : T(T_in), delta(delta_in) {
  if (!(T >= 1e9)) throw ArgumentError("BoundParams: requires T >= 1e9");
  e_delta = zetaline::e_delta(T, delta, prec);
}

BoundParams BoundParams::rh_limit(long prec) {
  BoundParams p(1e9, 0.5, prec);
  p.T = std::numeric_limits<double>::infinity();
  p.delta = 0.0;
  p.e_delta = BallReal::from_ui(0, BallReal::clamp_prec(prec));
  p.limit = true;
  return p;
}

BallReal epsilon_factor(double alpha, double t, const Constants& consts,
                        long prec) {
  if (!(alpha >= 1.0 && alpha <= 1.5))
    throw ArgumentError("epsilon_factor: requires alpha in [1, 3/2]");
  if (!(t >= 1e6)) throw ArgumentError("epsilon_factor: requires t >= 1e6");
  long p = BallReal::clamp_prec(prec);
  long pw = p + 16;
  BallReal lt = log_ball(BallReal::from_double(t, pw), pw);
  BallReal pow_t =
      (alpha == 1.0)
          ? lt
          : exp_ball(mul(BallReal::from_double(2.0 * alpha - 1.0),
                         log_ball(lt, pw), pw), pw);
  BallReal den = sub_ui(div(pow_t, consts.a0, pw), 1, pw);
  if (den.sign() != Sign::positive)
    throw UndecidedError(
        "epsilon_factor: denominator encloses zero; raise precision");
  return ui_div(1, den, p);
}

BallReal rho_sum_coefficient(double alpha, double t, const Constants& consts,
                             long prec) {
  if (!(alpha >= 1.0 && alpha <= 1.5))
    throw ArgumentError("rho_sum_coefficient: requires alpha in [1, 3/2]");
  if (!(t >= 1e6))
    throw ArgumentError("rho_sum_coefficient: requires t >= 1e6");
  long p = BallReal::clamp_prec(prec);
  long pw = p + 16;
  BallReal lt = log_ball(BallReal::from_double(t, pw), pw);
  BallReal pw_t = exp_ball(mul(BallReal::from_double(1.0 - 2.0 * alpha),
                               log_ball(lt, pw), pw), pw);
  return mul(consts.a0, pw_t, p);
}

BallReal general_alpha_bound(double alpha, double t, const BoundParams& params,
                             const Constants& consts, const PrimeTable& primes,
                             long prec) {
  if (!(alpha >= 1.0 && alpha <= 1.5))
    throw ArgumentError("general_alpha_bound: requires alpha in [1, 3/2]");
  check_theorem_range(t, params, "general_alpha_bound");
  long p = BallReal::clamp_prec(prec);
  long pw = p + 16;

  BallReal lt = log_ball(BallReal::from_double(t, pw), pw);
  BallReal llt = log_ball(lt, pw);

  // exponent 2 - 2 alpha is exact in double; alpha = 1 collapses the power
  BallReal lead =
      (alpha == 1.0)
          ? div_ui(consts.a0, 2, pw)
          : mul(div_ui(consts.a0, 2, pw),
                exp_ball(mul(BallReal::from_double(2.0 - 2.0 * alpha), llt,
                             pw), pw), pw);

  // cutoff widened upward: an extra term only weakens the bound
  double x = sqr(lt, pw).upper_d();
  BallReal prime_term = weighted_sum(primes, x, alpha, 0, pw);

  BallReal tail_term = mul(div(BallReal::from_double(2.0 * alpha - 1.0),
                               consts.lambda0, pw),
                           params.e_delta, pw);
  BallReal t2_term =
      div(ratio(32, 10, pw), sqr(BallReal::from_double(t, pw), pw), pw);

  BallReal inner =
      add(add(add(lead, prime_term, pw), tail_term, pw), t2_term, pw);
  BallReal eps = epsilon_factor(alpha, t, consts, pw);
  return mul(add_ui(eps, 1, pw), inner, p);
}

TheoremBounds theorem_bounds(double t, const BoundParams& params, long prec) {
  check_theorem_range(t, params, "theorem_bounds");
  long p = BallReal::clamp_prec(prec);
  long pw = p + 16;

  BallReal lt = log_ball(BallReal::from_double(t, pw), pw);
  BallReal llt = log_ball(lt, pw);
  BallReal lllt = log_ball(llt, pw);
  BallReal gamma = BallReal::euler_gamma(pw);
  const BallReal& E = params.e_delta;

  TheoremBounds out;
  out.logderiv = add(add(add(mul_ui(llt, 2, pw), ratio(1219, 1000, pw), pw),
                         div(ratio(16108, 1000, pw), sqr(llt, pw), pw), pw),
                     mul(ratio(1057, 1000, pw), E, pw), p);

  BallReal log2eg = add(BallReal::log_ui(2, pw), gamma, pw);
  out.log_zeta =
      add(add(add(lllt, log2eg, pw), div(ratio(3404, 1000, pw), llt, pw), pw),
          mul(ratio(793, 1000, pw), E, pw), p);

  BallReal core = add(add(llt, ratio(3404, 1000, pw), pw),
                      div(ratio(9378, 1000, pw), llt, pw), pw);
  BallReal scale = mul_ui(exp_ball(gamma, pw), 2, pw);
  out.inv_zeta = mul(mul(scale, core, pw),
                     exp_ball(mul(ratio(793, 1000, pw), E, pw), pw), p);
  out.zeta = out.inv_zeta;
  return out;
}

BallReal raw_logderiv_assembly(double t, const BoundParams& params,
                               const Constants& consts, long prec) {
  check_theorem_range(t, params, "raw_logderiv_assembly");
  long p = BallReal::clamp_prec(prec);
  long pw = p + 16;

  BallReal lt = log_ball(BallReal::from_double(t, pw), pw);
  BallReal llt = log_ball(lt, pw);
  BallReal gamma = BallReal::euler_gamma(pw);

  BallReal sum_part =
      add(sub(mul_ui(llt, 2, pw), gamma, pw),
          div(ratio(13, 10, pw), mul_ui(sqr(llt, pw), 4, pw), pw), pw);
  BallReal inner =
      add(add(add(div_ui(consts.a0, 2, pw), sum_part, pw),
              div(params.e_delta, consts.lambda0, pw), pw),
          div(ratio(32, 10, pw), sqr(BallReal::from_double(t, pw), pw), pw),
          pw);
  BallReal eps = epsilon_factor(1.0, t, consts, pw);
  return mul(add_ui(eps, 1, pw), inner, p);
}

BallReal raw_log_zeta_assembly(double t, const BoundParams& params,
                               const Constants& consts, long prec) {
  check_theorem_range(t, params, "raw_log_zeta_assembly");
  long p = BallReal::clamp_prec(prec);
  long pw = p + 16;

  BallReal lt = log_ball(BallReal::from_double(t, pw), pw);
  BallReal llt = log_ball(lt, pw);
  BallReal lllt = log_ball(llt, pw);
  BallReal gamma = BallReal::euler_gamma(pw);

  BallReal log2eg = add(BallReal::log_ui(2, pw), gamma, pw);
  BallReal inner =
      add(add(add(add(lllt, log2eg, pw),
                  div(consts.a0, mul_ui(llt, 4, pw), pw), pw),
              ui_div(1, mul_ui(sqr(llt, pw), 4, pw), pw), pw),
          div(mul_ui(params.e_delta, 3, pw), mul_ui(consts.lambda0, 4, pw),
              pw), pw);
  BallReal eps = epsilon_factor(1.0, t, consts, pw);
  return mul(add_ui(eps, 1, pw), inner, p);
}

std::vector<ComparisonBound> comparison_bounds(double t, long prec) {
  if (!(t >= 3.0)) throw ArgumentError("comparison_bounds: requires t >= 3");
  long p = BallReal::clamp_prec(prec);
  long pw = p + 16;
  double inf = std::numeric_limits<double>::infinity();

  BallReal lt = log_ball(BallReal::from_double(t, pw), pw);
  BallReal llt = log_ball(lt, pw);

  std::vector<ComparisonBound> out;
  auto push = [&](const char* name, BallReal v, double lo, double hi) {
    out.push_back({name, std::move(v), lo, hi, t >= lo && t <= hi});
  };

  push("logderiv_unconditional", mul(ratio(4014, 100, pw), lt, p), 133, inf);
  push("inv_zeta_unconditional", mul(ratio(429, 10, pw), lt, p), 133, inf);

  BallReal patel = min_ball(
      lt, min_ball(add(div_ui(lt, 2, pw), ratio(193, 100, pw), pw),
                   add(div_ui(lt, 5, pw), ratio(4402, 100, pw), pw), pw), p);
  push("zeta_unconditional", patel, 3, inf);

  push("logderiv_partial_rh", mul(ratio(639, 1000, pw), lt, p), 1e6,
       2.99997e12);
  push("inv_zeta_partial_rh", mul(ratio(2506, 1000, pw), lt, p), 1e6,
       2.99997e12);

  BallReal gamma = BallReal::euler_gamma(pw);
  BallReal coef =
      div(mul_ui(exp_ball(gamma, pw), 12, pw), sqr(BallReal::pi(pw), pw), pw);
  BallReal lls_inner =
      add(add(add(sub(llt, BallReal::log_ui(2, pw), pw), ratio(1, 2, pw), pw),
              ui_div(1, llt, pw), pw),
          div(mul_ui(llt, 14, pw), lt, pw), pw);
  push("inv_zeta_rh", mul(coef, lls_inner, p), 1e10, inf);

  BallReal csv = add(sub(mul_ui(llt, 2, pw), ratio(4989, 10000, pw), pw),
                     div(mul(ratio(535, 100, pw), sqr(llt, pw), pw), lt, pw),
                     p);
  push("logderiv_rh", csv, 1e30, inf);
  return out;
}

AuditReport audit_constants(const BoundParams& params, const Constants& consts,
                            const std::vector<double>& t_grid, long prec) {
  long p = BallReal::clamp_prec(prec);
  long pw = p + 16;

  std::vector<double> grid = t_grid;
  if (grid.empty()) {
    const int n = 200;
    double l0 = std::log(1e6), l1 = std::log(1e12);
    for (int i = 0; i < n; ++i)
      grid.push_back(std::exp(l0 + (l1 - l0) * i / (n - 1)));
    grid.front() = 1e6;
    grid.back() = 1e12;
  }
  for (double t : grid) check_theorem_range(t, params, "audit_constants");

  AuditReport rep;
  auto fail = [&](const std::string& line) { rep.failures.push_back(line); };

  std::size_t bad_i = 0, bad_ii = 0, bad_iiib = 0;
  for (double t : grid) {
    TheoremBounds tb = theorem_bounds(t, params, pw);
    if (!surely_le(raw_logderiv_assembly(t, params, consts, pw),
                   tb.logderiv)) {
      ++bad_i;
      fail("step (i): raw logderiv assembly exceeds packaged bound at t=" +
           std::to_string(t));
    }
    if (!surely_le(raw_log_zeta_assembly(t, params, consts, pw),
                   tb.log_zeta)) {
      ++bad_ii;
      fail("step (ii): raw log zeta assembly exceeds packaged bound at t=" +
           std::to_string(t));
    }
    if (!surely_le(exp_ball(tb.log_zeta, pw), tb.inv_zeta)) {
      ++bad_iiib;
      fail("step (iii): exp of log zeta bound exceeds inverse bound at t=" +
           std::to_string(t));
    }
  }

  const int qn = 10000;
  std::size_t bad_iiia = 0;
  for (int j = 0; j < qn; ++j) {
    double xj = 1.297 * j / (qn - 1);
    BallReal xb = BallReal::from_double(xj, pw);
    BallReal rhs = add(add_ui(xb, 1, pw),
                       mul(ratio(8093, 10000, pw), sqr(xb, pw), pw), pw);
    if (!surely_le(exp_ball(xb, pw), rhs)) {
      ++bad_iiia;
      fail("step (iii): quadratic bound on e^x fails at x=" +
           std::to_string(xj));
    }
  }

  BallReal eps1 = epsilon_factor(1.0, 1e6, consts, pw);
  BallReal one_eps = add_ui(eps1, 1, pw);
  bool iv_ok = true;
  if (!surely_le(div(one_eps, consts.lambda0, pw), ratio(1057, 1000, pw))) {
    iv_ok = false;
    fail("step (iv): 1.057 does not dominate (1+eps(1,1e6))/lambda0");
  }
  if (!surely_le(div(mul_ui(one_eps, 3, pw), mul_ui(consts.lambda0, 4, pw),
                     pw), ratio(793, 1000, pw))) {
    iv_ok = false;
    fail("step (iv): 0.793 does not dominate 3(1+eps(1,1e6))/(4 lambda0)");
  }
  if (!surely_le(mul(ratio(8093, 10000, pw), sqr(ratio(3404, 1000, pw), pw),
                     pw), ratio(9378, 1000, pw))) {
    iv_ok = false;
    fail("step (iv): 9.378 does not dominate 0.8093 * 3.404^2");
  }

  std::string pts = std::to_string(grid.size());
  if (bad_i == 0)
    rep.checks.push_back(
        "step (i): raw logderiv assembly dominated at " + pts + " grid points");
  if (bad_ii == 0)
    rep.checks.push_back(
        "step (ii): raw log zeta assembly dominated at " + pts +
        " grid points");
  if (bad_iiia == 0 && bad_iiib == 0)
    rep.checks.push_back(
        "step (iii): e^x <= 1 + x + 0.8093 x^2 certified on [0, 1.297]; "
        "exp(log zeta bound) <= inverse bound on the grid");
  if (iv_ok)
    rep.checks.push_back(
        "step (iv): packaged scalars dominate their exact counterparts");

  rep.passed = rep.failures.empty();
  return rep;
}

}  // namespace zetaline
