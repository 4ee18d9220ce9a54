#include "zetaline/zeta.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

namespace zetaline {

namespace {

// B_0..B_max as exact rationals, B_m = -sum_{j<m} C(m+1,j) B_j / (m+1).
const std::vector<mpq_class>& bernoulli_table() {
  static std::vector<mpq_class> table;
  static std::once_flag once;
  std::call_once(once, [] {
    const int maxm = 68;
    table.resize(maxm + 1);
    table[0] = 1;
    mpz_class binom;
    for (int m = 1; m <= maxm; ++m) {
      mpq_class acc = 0;
      for (int j = 0; j < m; ++j) {
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned>(m) + 1,
                     static_cast<unsigned>(j));
        acc += mpq_class(binom) * table[j];
      }
      table[m] = -acc / (m + 1);
      table[m].canonicalize();
    }
  });
  return table;
}

BallReal ball_from_mpq(const mpq_class& q, long prec) {
  prec = BallReal::clamp_prec(prec);
  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  mpfr_set_q(lo, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi, q.get_mpq_t(), MPFR_RNDU);
  BallReal out = BallReal::from_endpoints(lo, hi, prec);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return out;
}

double ceil_abs_upper(const BallComplex& s) {
  const double a = cabs(s).upper_d();
  if (!std::isfinite(a)) throw ArgumentError("ball is not finite");
  return std::ceil(a);
}

// n^{-s} together with log n; one mpfr log, one exp, one sin/cos pair.
BallComplex inv_pow(unsigned long n, const BallComplex& neg_s, long prec,
                    BallReal* log_out) {
  BallReal ln = BallReal::log_ui(n, prec);
  if (log_out != nullptr) *log_out = ln;
  return cexp(cmul_real(neg_s, ln, prec), prec);
}

}  // namespace

BallReal bernoulli_over_factorial(int two_k, long prec) {
  const auto& tab = bernoulli_table();
  if (two_k < 0 || static_cast<size_t>(two_k) >= tab.size())
    throw ArgumentError("Bernoulli index out of cached range");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned>(two_k));
  mpq_class q = tab[static_cast<size_t>(two_k)] / mpq_class(fact);
  q.canonicalize();
  return ball_from_mpq(q, prec);
}

std::pair<BallComplex, BallComplex> zeta_with_derivative(
    const BallComplex& s, const EvalConfig& cfg) {
  const long prec = BallReal::clamp_prec(cfg.prec);
  if (!s.is_finite()) throw ArgumentError("s is not a finite ball");
  if (s.re.contains_si(1) && s.im.contains_si(0))
    throw PoleError("zeta pole: s-ball contains 1");
  const int M = cfg.em_order;
  if (M < 1 || M > 32) throw ConfigError("em_order outside [1, 32]");

  const double abs_ceil = ceil_abs_upper(s);
  long N;
  if (cfg.em_terms == 0) {
    N = std::max<long>(50, 2 * static_cast<long>(abs_ceil));
  } else {
    N = cfg.em_terms;
    if (N < static_cast<long>(abs_ceil))
      throw ConfigError("em_terms below ceil|s|; remainder bound invalid");
  }
  if (N < 2) N = 2;

  const BallComplex neg_s = cneg(s);
  BallComplex zsum = BallComplex::from_real(BallReal::from_long(1, prec));
  BallComplex dsum{BallReal::from_long(0, prec), BallReal::from_long(0, prec)};
  for (unsigned long n = 2; n < static_cast<unsigned long>(N); ++n) {
    BallReal ln(prec);
    BallComplex term = inv_pow(n, neg_s, prec, &ln);
    zsum = cadd(zsum, term, prec);
    dsum = csub(dsum, cmul_real(term, ln, prec), prec);
  }

  BallReal logN = BallReal::log_ui(static_cast<unsigned long>(N), prec);
  BallComplex Npow = cexp(cmul_real(neg_s, logN, prec), prec);  // N^{-s}
  BallComplex N1ms = cmul_real(Npow, BallReal::from_long(N, prec), prec);

  // N^{1-s}/(s-1) and its derivative.
  BallComplex sm1 = csub(s, BallComplex::from_real(BallReal::from_long(1, prec)), prec);
  BallComplex inv_sm1 = cdiv(BallComplex::from_real(BallReal::from_long(1, prec)), sm1, prec);
  BallComplex t1 = cmul(N1ms, inv_sm1, prec);
  BallComplex t1d = cneg(cmul(
      t1, cadd(BallComplex::from_real(logN), inv_sm1, prec), prec));

  BallReal half = BallReal::from_double(0.5, prec);
  BallComplex t2 = cmul_real(Npow, half, prec);
  BallComplex t2d = cneg(cmul_real(t2, logN, prec));

  BallComplex zeta = cadd(cadd(zsum, t1, prec), t2, prec);
  BallComplex zetad = cadd(cadd(dsum, t1d, prec), t2d, prec);

  // Correction sum: B_{2k}/(2k)! * (s)_{2k-1} * N^{1-s-2k}, k = 1..M.
  BallComplex poch = s;                                   // (s)_{2k-1}
  BallComplex hsum = cdiv(BallComplex::from_real(BallReal::from_long(1, prec)),
                          s, prec);                       // sum 1/(s+j)
  BallReal invN2 = ui_div(1, sqr(BallReal::from_long(N, prec), prec), prec);
  BallComplex Nterm = cmul_real(cdiv_real(N1ms, BallReal::from_long(N, prec), prec),
                                ui_div(1, BallReal::from_long(N, prec), prec),
                                prec);                    // N^{-1-s}
  for (int k = 1; k <= M; ++k) {
    if (k > 1) {
      for (int j = 2 * k - 3; j <= 2 * k - 2; ++j) {
        BallComplex spj = cadd(
            s, BallComplex::from_real(BallReal::from_long(j, prec)), prec);
        poch = cmul(poch, spj, prec);
        hsum = cadd(hsum, cdiv(BallComplex::from_real(
                                   BallReal::from_long(1, prec)),
                               spj, prec),
                    prec);
      }
      Nterm = cmul_real(Nterm, invN2, prec);
    }
    BallReal coef = bernoulli_over_factorial(2 * k, prec);
    BallComplex term = cmul_real(cmul(poch, Nterm, prec), coef, prec);
    zeta = cadd(zeta, term, prec);
    BallComplex dfac = csub(hsum, BallComplex::from_real(logN), prec);
    zetad = cadd(zetad, cmul(term, dfac, prec), prec);
  }

  // Remainder: |R_M| <= |s+2M+1|/(sigma+2M+1) * |B_{2M+2}/(2M+2)!| *
  //            |(s)_{2M+1}| * N^{-sigma-2M-1}.
  BallComplex poch_full = poch;
  for (int j = 2 * M - 1; j <= 2 * M; ++j) {
    poch_full = cmul(
        poch_full,
        cadd(s, BallComplex::from_real(BallReal::from_long(j, prec)), prec),
        prec);
  }
  const double sigma_lo = s.re.lower_d();
  const double abs_poch = cabs(poch_full, prec).upper_d();
  const double abs_top = cabs(
      cadd(s, BallComplex::from_real(BallReal::from_long(2 * M + 1, prec)),
           prec),
      prec).upper_d();
  const double coef_abs =
      abs_ball(bernoulli_over_factorial(2 * M + 2, prec)).upper_d();
  const double denom = sigma_lo + 2 * M + 1;
  if (!(denom > 0)) throw ConfigError("remainder bound not finite here");
  // N^{-sigma_lo-2M-1} rounded up.
  BallReal expo = mul(BallReal::from_double(-(sigma_lo) - (2 * M + 1), prec),
                      logN, prec);
  const double npow_up = exp_ball(expo, prec).upper_d();
  const double rem = rd::mul_up(
      rd::mul_up(rd::mul_up(rd::div_up(abs_top, denom), coef_abs), abs_poch),
      npow_up);
  if (!std::isfinite(rem)) throw ConfigError("remainder bound not finite");
  zeta.re = widen(zeta.re, rem);
  zeta.im = widen(zeta.im, rem);

  // Derivative remainder: Cauchy on |w - s| = 1/2, so the same bound with
  // sigma -> sigma - 1/2 and every |s+j| padded by 1/2, divided by 1/2.
  double poch_pad = 1.0;
  for (int j = 0; j <= 2 * M; ++j) {
    const double aj = cabs(
        cadd(s, BallComplex::from_real(BallReal::from_long(j, prec)), prec),
        prec).upper_d();
    poch_pad = rd::mul_up(poch_pad, rd::add_up(aj, 0.5));
  }
  const double denom_d = sigma_lo - 0.5 + 2 * M + 1;
  if (!(denom_d > 0)) throw ConfigError("remainder bound not finite here");
  BallReal expo_d = mul(
      BallReal::from_double(-(sigma_lo - 0.5) - (2 * M + 1), prec), logN, prec);
  const double npow_d = exp_ball(expo_d, prec).upper_d();
  const double rem_d = rd::mul_up(
      2.0, rd::mul_up(rd::mul_up(rd::mul_up(rd::div_up(
                                                rd::add_up(abs_top, 0.5),
                                                denom_d),
                                            coef_abs),
                                 poch_pad),
                      npow_d));
  if (!std::isfinite(rem_d)) throw ConfigError("remainder bound not finite");
  zetad.re = widen(zetad.re, rem_d);
  zetad.im = widen(zetad.im, rem_d);

  return {zeta, zetad};
}

BallComplex log_deriv(const BallComplex& s, const EvalConfig& cfg) {
  auto [z, zd] = zeta_with_derivative(s, cfg);
  if (cabs2(z, BallReal::clamp_prec(cfg.prec)).sign() != Sign::positive)
    throw UndecidedError(
        "zeta enclosure touches zero; increase prec or em_terms");
  return cdiv(zd, z, BallReal::clamp_prec(cfg.prec));
}

BallComplex digamma(const BallComplex& z) {
  const long prec = std::max(z.prec(), kDefaultPrec);
  if (!z.is_finite()) throw ArgumentError("z is not a finite ball");
  BallComplex w = z;
  BallComplex acc{BallReal::from_long(0, prec), BallReal::from_long(0, prec)};
  const BallComplex one = BallComplex::from_real(BallReal::from_long(1, prec));
  // The remainder bound needs |w| >= 8; shifting further is cheap and
  // tightens it quadratically.
  const double target = 512.0;
  int shifts = 0;
  while (cabs(w, prec).lower_d() < target || w.re.lower_d() < 0.0) {
    if (w.contains_zero_strict())
      throw PoleError("digamma pole: ball meets a non-positive integer");
    acc = cadd(acc, cdiv(one, w, prec), prec);
    w = cadd(w, one, prec);
    if (++shifts > 100000)
      throw ArgumentError("digamma shift did not terminate; ball too wide");
  }
  BallComplex out = clog(w, prec);
  out = csub(out, cdiv(BallComplex::from_real(BallReal::from_double(0.5, prec)), w, prec), prec);
  const double err =
      ui_div(1, mul_ui(sqr(cabs(w, prec), prec), 4, prec), prec).upper_d();
  out.re = widen(out.re, err);
  out.im = widen(out.im, err);
  return csub(out, acc, prec);
}

}  // namespace zetaline
