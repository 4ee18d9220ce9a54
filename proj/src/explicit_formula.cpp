#include "zetaline/explicit_formula.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace zetaline {

namespace {

constexpr std::size_t kChunk = 4096;

struct ZeroSumCtx {
  const std::vector<BallReal>* ords;
  BallReal dr;   // 1/2 - alpha
  BallReal dr2;  // dr^2
  BallReal mxy;  // (xy)^{1/2 - alpha}
  BallReal mx;   // x^{1/2 - alpha}
  BallReal lxy;  // log(xy)
  BallReal lx;   // log(x)
  BallReal tb;
  long p;
};

// sum over rho = 1/2 +- i gamma of ((xy)^{rho-s} - x^{rho-s}) / (rho-s)^2
// for one block of ordinates; the common 1/log y is applied by the caller.
BallComplex zero_chunk(const ZeroSumCtx& c, std::size_t b, std::size_t e) {
  long p = c.p;
  BallComplex acc{BallReal::from_ui(0, p), BallReal::from_ui(0, p)};
  for (std::size_t i = b; i < e; ++i) {
    const BallReal& g = (*c.ords)[i];
    for (int side = 0; side < 2; ++side) {
      BallReal di = side == 0 ? sub(g, c.tb, p) : neg(add(g, c.tb, p));
      auto [sxy, cxy] = sin_cos(mul(di, c.lxy, p), p);
      auto [sx, cx] = sin_cos(mul(di, c.lx, p), p);
      BallComplex num(sub(mul(c.mxy, cxy, p), mul(c.mx, cx, p), p),
                      sub(mul(c.mxy, sxy, p), mul(c.mx, sx, p), p));
      BallComplex den(sub(c.dr2, sqr(di, p), p),
                      mul(mul_ui(c.dr, 2, p), di, p));
      acc = cadd(acc, cdiv(num, den, p), p);
    }
  }
  return acc;
}

}  // namespace

FormulaParams::FormulaParams(double x_in, double y_in, BallComplex s_in)
    : x(x_in), y(y_in), s(std::move(s_in)) {
  if (!(x >= 2.0) || !(y >= 2.0))
    throw ArgumentError("FormulaParams: requires x >= 2 and y >= 2");
  if (!(s.re.lower_d() >= 1.0) || !(s.re.upper_d() <= 1.5))
    throw ArgumentError("FormulaParams: requires Re s in [1, 3/2]");
}

FormulaParams FormulaParams::instantiate(double alpha, double t,
                                         const Constants& consts, long prec) {
  long p = BallReal::clamp_prec(prec);
  double l0 = consts.lambda0.mid_d();
  double y = std::exp(l0 / (alpha - 0.5));
  if (y < 2.0) y = 2.0;
  double lt = std::log(t);
  double x = lt * lt / y;
  if (x < 2.0) x = 2.0;
  return FormulaParams(
      x, y,
      BallComplex(BallReal::from_double(alpha, p), BallReal::from_double(t, p)));
}

BallReal weight_w(long n, const FormulaParams& params, long prec) {
  double xy = params.x * params.y;
  if (n < 2 || static_cast<double>(n) > xy)
    throw ArgumentError("weight_w: requires 2 <= n <= x*y");
  long p = BallReal::clamp_prec(prec);
  if (static_cast<double>(n) <= params.x) return BallReal::from_ui(1, p);
  long pw = p + 16;
  BallReal lxy = log_ball(mul(BallReal::from_double(params.x, pw),
                              BallReal::from_double(params.y, pw), pw), pw);
  BallReal ln = BallReal::log_ui(static_cast<unsigned long>(n), pw);
  return div(sub(lxy, ln, pw),
             log_ball(BallReal::from_double(params.y, pw), pw), p);
}

FormulaSides formula_sides(const FormulaParams& params, const ZeroTable& table,
                           const PrimeTable& primes, const EvalConfig& cfg) {
  if (!(params.s.im.lower_d() >= 10.0))
    throw ArgumentError("formula_sides: requires Im s >= 10");
  double xy = params.x * params.y;
  if (static_cast<double>(primes.limit()) < xy)
    throw CoverageError("formula_sides: sieve covers " +
                        std::to_string(primes.limit()) + ", needs " +
                        std::to_string(static_cast<long>(std::ceil(xy))));

  long p = BallReal::clamp_prec(cfg.prec);
  const BallComplex& s = params.s;
  double t_mid = s.im.mid_d();

  BallReal xb = BallReal::from_double(params.x, p);
  BallReal yb = BallReal::from_double(params.y, p);
  BallReal xyb = mul(xb, yb, p);
  BallReal lx = log_ball(xb, p);
  BallReal ly = log_ball(yb, p);
  BallReal lxy = log_ball(xyb, p);

  FormulaSides out;
  out.lhs = log_deriv(s, cfg);

  // zero sum, chunked with an in-order combine so radii are deterministic
  {
    ZeroSumCtx ctx;
    ctx.ords = &table.ordinates();
    ctx.dr = sub(BallReal::from_double(0.5, p), s.re, p);
    ctx.dr2 = sqr(ctx.dr, p);
    ctx.mxy = exp_ball(mul(ctx.dr, lxy, p), p);
    ctx.mx = exp_ball(mul(ctx.dr, lx, p), p);
    ctx.lxy = lxy;
    ctx.lx = lx;
    ctx.tb = s.im;
    ctx.p = p;

    const std::size_t n = table.count_below(table.claimed_complete_to());
    const std::size_t nchunks = (n + kChunk - 1) / kChunk;
    BallComplex acc{BallReal::from_ui(0, p), BallReal::from_ui(0, p)};
    if (nchunks <= 1) {
      acc = zero_chunk(ctx, 0, n);
    } else {
      std::vector<BallComplex> parts(nchunks, acc);
#pragma omp parallel for schedule(dynamic)
      for (long c = 0; c < static_cast<long>(nchunks); ++c) {
        std::size_t b = static_cast<std::size_t>(c) * kChunk;
        std::size_t e = b + kChunk < n ? b + kChunk : n;
        parts[c] = zero_chunk(ctx, b, e);
      }
      for (const BallComplex& part : parts) acc = cadd(acc, part, p);
    }
    out.zero_term = cdiv_real(acc, ly, p);
  }

  // trivial zeros: cut once the term envelope drops under the working
  // precision, then absorb the geometric remainder into the radius
  {
    double ly_d = std::log(params.y);
    double cut = std::ldexp(1.0, -static_cast<int>(p));
    BallComplex acc{BallReal::from_ui(0, p), BallReal::from_ui(0, p)};
    long k = 1;
    for (; k < 4 * p; ++k) {
      double env = 2.0 * std::pow(xy, -2.0 * k - 1.0) / (4.0 * k * k * ly_d);
      if (env < cut) break;
      BallComplex den_base =
          BallComplex(add_ui(s.re, 2 * static_cast<unsigned long>(k), p),
                      s.im);
      BallComplex d = cneg(den_base);
      BallComplex num = csub(cexp(cmul_real(d, lxy, p), p),
                             cexp(cmul_real(d, lx, p), p), p);
      acc = cadd(acc, cdiv(num, csqr(den_base, p), p), p);
    }
    double t_lo = s.im.lower_d();
    double tail = 2.0 * std::pow(params.x, -2.0 * k - 1.0) /
                  (t_lo * t_lo * (1.0 - 1.0 / (params.x * params.x))) *
                  (1.0 + 1e-9);
    acc.re = widen(acc.re, tail);
    acc.im = widen(acc.im, tail);
    out.trivial_term = cdiv_real(acc, ly, p);
  }

  // pole term
  {
    BallComplex oms = csub(
        BallComplex(BallReal::from_ui(1, p), BallReal::from_ui(0, p)), s, p);
    BallComplex num = csub(cexp(cmul_real(oms, lxy, p), p),
                           cexp(cmul_real(oms, lx, p), p), p);
    out.pole_term = cdiv_real(cdiv(num, csqr(oms, p), p), ly, p);
  }

  // weighted prime sum
  {
    BallComplex acc{BallReal::from_ui(0, p), BallReal::from_ui(0, p)};
    BallComplex neg_s = cneg(s);
    for (const PrimePower& e : primes.powers()) {
      if (static_cast<double>(e.n) > xy) break;
      BallReal coef = BallReal::log_ui(e.p, p);
      if (static_cast<double>(e.n) > params.x)
        coef = mul(coef, weight_w(e.n, params, p), p);
      BallComplex npow = cexp(cmul_real(neg_s, BallReal::log_ui(e.n, p), p), p);
      acc = cadd(acc, cmul_real(npow, coef, p), p);
    }
    out.prime_term = acc;
  }

  // budget for |gamma| beyond the table's claimed completeness
  {
    BallReal oma = sub(BallReal::from_ui(1, p), s.re, p);
    BallReal xpow = exp_ball(mul(oma, lx, p), p);
    BallReal ypow = exp_ball(mul(oma, ly, p), p);
    BallReal coef = div(mul(xpow, add_ui(ypow, 1, p), p), ly, p);
    BallReal env =
        e_enclosure(table, t_mid, table.claimed_complete_to(), p).second;
    out.zero_tail_budget = mul(coef, env, p);
  }

  return out;
}

BallReal residual_check(const FormulaParams& params, const ZeroTable& table,
                        const PrimeTable& primes, const EvalConfig& cfg) {
  long p = BallReal::clamp_prec(cfg.prec);
  FormulaSides sides = formula_sides(params, table, primes, cfg);
  BallComplex rhs = csub(
      cadd(cneg(sides.zero_term), sides.pole_term, p),
      cadd(sides.trivial_term, sides.prime_term, p), p);
  BallReal residual = cabs(csub(sides.lhs, rhs, p), p);
  BallReal margin = sub(sides.zero_tail_budget, residual, p);
  if (margin.contains_zero())
    throw UndecidedError(
        "residual_check: margin straddles zero; enlarge the zero table or "
        "raise the precision");
  return margin;
}

}  // namespace zetaline
