#include "zetaline/segment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace zetaline {

namespace {

constexpr double kCenter = 1.25;   // expansion center sigma
constexpr double kRadius = 0.35;   // model disc
constexpr double kDiscPad = 0.04;  // quadrature Cauchy disc
constexpr long kMaxCutoff = 6200000;
constexpr long kChunk = 1 << 16;

struct Raw {
  mpfr_t x;
  explicit Raw(long prec) { mpfr_init2(x, prec); }
  ~Raw() { mpfr_clear(x); }
  Raw(const Raw&) = delete;
  operator mpfr_ptr() { return x; }
  operator mpfr_srcptr() const { return x; }
};

// Upward-safe scalar helpers; libm results are inflated by a generous
// relative slack before use in radius arithmetic.
double pow_up(double base, double expo) {
  double v = std::exp(expo * std::log(base));
  return rd::mul_up(v, 1 + 1e-12);
}

double pow_dn(double base, double expo) {
  double v = std::exp(expo * std::log(base));
  return rd::down(v * (1 - 1e-12));
}

int tm_degree(long prec) { return std::max(20L, prec / 8) > 64 ? 64 : static_cast<int>(std::max(20L, prec / 8)); }

// sup of the Euler-Maclaurin remainder over s = center + disc(pad), in log
// space to survive large M and t.
double em_tail_sup(double abs_c_up, double pad, int M, double n_cut,
                   double sigma_min) {
  double lsum = 0;
  const double s_up = abs_c_up + pad;
  for (int j = 0; j <= 2 * M; ++j) lsum += std::log(s_up + j);
  lsum += std::log(
      abs_ball(bernoulli_over_factorial(2 * M + 2, 64)).upper_d());
  lsum += std::log(s_up + 2 * M + 1) - std::log(sigma_min + 2 * M + 1);
  lsum += (-sigma_min - 2 * M - 1) * std::log(n_cut);
  double v = std::exp(lsum);
  if (!std::isfinite(v)) throw ConfigError("remainder bound not finite");
  return rd::mul_up(v, 1 + 1e-10);
}

struct Kahan {
  double s = 0, c = 0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

void accumulate_range(const std::vector<double>& cs, long lo, long hi,
                      int jmax, double phase_rad, MomentSums& out,
                      std::vector<Kahan>& kre, std::vector<Kahan>& kim) {
  std::vector<double> inv(static_cast<size_t>(jmax) + 2);
  std::vector<double> k1(static_cast<size_t>(jmax) + 1);
  for (int j = 0; j <= jmax + 1; ++j) inv[j] = j > 0 ? 1.0 / j : 0.0;
  for (int j = 0; j <= jmax; ++j) k1[j] = phase_rad + (j + 6) * 0x1p-50;
  for (long n = lo; n < hi; ++n) {
    const double c = cs[static_cast<size_t>(2 * n)];
    const double s = cs[static_cast<size_t>(2 * n + 1)];
    const double ln = std::log(static_cast<double>(n));
    double w = std::exp(-kCenter * ln);  // n^{-5/4} (log n)^j / j!
    for (int j = 0; j <= jmax; ++j) {
      kre[static_cast<size_t>(j)].add(w * c);
      kim[static_cast<size_t>(j)].add(w * s);
      out.rad[static_cast<size_t>(j)] += w * k1[static_cast<size_t>(j)];
      out.maj[static_cast<size_t>(j)] += w;
      w = w * ln * inv[static_cast<size_t>(j + 1)];
    }
  }
}

MomentSums zero_sums(int jmax) {
  MomentSums m;
  m.re.assign(static_cast<size_t>(jmax) + 1, 0.0);
  m.im.assign(static_cast<size_t>(jmax) + 1, 0.0);
  m.rad.assign(static_cast<size_t>(jmax) + 1, 0.0);
  m.maj.assign(static_cast<size_t>(jmax) + 1, 0.0);
  return m;
}

void finalize_rad(MomentSums& m, int jmax) {
  for (int j = 0; j <= jmax; ++j)
    m.rad[static_cast<size_t>(j)] = rd::add_up(
        m.rad[static_cast<size_t>(j)],
        rd::mul_up(m.maj[static_cast<size_t>(j)], 0x1p-44));
}

}  // namespace

MomentSums moment_kernel_serial(const std::vector<double>& cs, long count,
                                int jmax, double phase_rad) {
  MomentSums out = zero_sums(jmax);
  std::vector<Kahan> kre(static_cast<size_t>(jmax) + 1);
  std::vector<Kahan> kim(static_cast<size_t>(jmax) + 1);
  accumulate_range(cs, 1, count, jmax, phase_rad, out, kre, kim);
  for (int j = 0; j <= jmax; ++j) {
    out.re[static_cast<size_t>(j)] = kre[static_cast<size_t>(j)].s;
    out.im[static_cast<size_t>(j)] = kim[static_cast<size_t>(j)].s;
  }
  finalize_rad(out, jmax);
  return out;
}

MomentSums moment_kernel(const std::vector<double>& cs, long count, int jmax,
                         double phase_rad) {
  const long nchunks = (count + kChunk - 1) / kChunk;
  std::vector<MomentSums> parts(static_cast<size_t>(nchunks));
#pragma omp parallel for schedule(dynamic)
  for (long ci = 0; ci < nchunks; ++ci) {
    long lo = std::max(1L, ci * kChunk);
    long hi = std::min(count, (ci + 1) * kChunk);
    MomentSums local = zero_sums(jmax);
    if (lo < hi) {
      std::vector<Kahan> kre(static_cast<size_t>(jmax) + 1);
      std::vector<Kahan> kim(static_cast<size_t>(jmax) + 1);
      accumulate_range(cs, lo, hi, jmax, phase_rad, local, kre, kim);
      for (int j = 0; j <= jmax; ++j) {
        local.re[static_cast<size_t>(j)] = kre[static_cast<size_t>(j)].s;
        local.im[static_cast<size_t>(j)] = kim[static_cast<size_t>(j)].s;
      }
    }
    parts[static_cast<size_t>(ci)] = std::move(local);
  }
  MomentSums out = zero_sums(jmax);
  for (const MomentSums& p : parts) {
    for (int j = 0; j <= jmax; ++j) {
      out.re[static_cast<size_t>(j)] += p.re[static_cast<size_t>(j)];
      out.im[static_cast<size_t>(j)] += p.im[static_cast<size_t>(j)];
      out.rad[static_cast<size_t>(j)] =
          rd::add_up(out.rad[static_cast<size_t>(j)],
                     p.rad[static_cast<size_t>(j)]);
      out.maj[static_cast<size_t>(j)] += p.maj[static_cast<size_t>(j)];
    }
  }
  finalize_rad(out, jmax);
  return out;
}

SegmentEvaluator::SegmentEvaluator(const BallReal& t, const EvalConfig& cfg)
    : t_(t), cfg_(cfg), prec_(BallReal::clamp_prec(cfg.prec)) {
  if (!t.is_finite()) throw ArgumentError("t is not a finite ball");
  if (t.lower_d() < 10.0) throw ArgumentError("segment evaluator needs t >= 10");
  if (t.upper_d() > 1e7)
    throw ConfigError("t above the supported ceiling 1e7");
  const int M = cfg.em_order;
  if (M < 1 || M > 32) throw ConfigError("em_order outside [1, 32]");
  if (cfg.quad_nodes < 1) throw ConfigError("quad_nodes must be positive");

  const double t_up = t.upper_d();
  long N = std::max(2000L, static_cast<long>(std::ceil(t_up / 2)) + 1);
  N = std::min(N, kMaxCutoff);
  n_cutoff_ = N;
  const int d = tm_degree(prec_);
  const int jmax = d + 2;

  // Phase tables: n^{-it} = e^{i theta_n}, theta chained from the smallest
  // prime factor; MPFR sin/cos only at primes.
  std::vector<std::uint32_t> spf(static_cast<size_t>(N), 0);
  std::vector<long> primes;
  for (long i = 2; i < N; ++i) {
    if (spf[static_cast<size_t>(i)] == 0) {
      spf[static_cast<size_t>(i)] = static_cast<std::uint32_t>(i);
      primes.push_back(i);
      if (i <= (N - 1) / i)
        for (long j = i * i; j < N; j += i)
          if (spf[static_cast<size_t>(j)] == 0)
            spf[static_cast<size_t>(j)] = static_cast<std::uint32_t>(i);
    }
  }

  const long pw = prec_ + 4;
  Raw lg(pw), th(pw), sn(pw), cn(pw), two_pi(pw);
  mpfr_const_pi(two_pi, MPFR_RNDN);
  mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);

  std::vector<double> cs(static_cast<size_t>(2 * N), 0.0);
  cs[2] = 1.0;  // n = 1
  for (long n = 2; n < N; ++n) {
    const long p = spf[static_cast<size_t>(n)];
    if (p == n) {
      mpfr_set_ui(lg, static_cast<unsigned long>(n), MPFR_RNDN);
      mpfr_log(lg, lg, MPFR_RNDN);
      mpfr_mul(th, lg, t_.mid(), MPFR_RNDN);
      mpfr_neg(th, th, MPFR_RNDN);
      mpfr_remainder(th, th, two_pi, MPFR_RNDN);
      mpfr_sin_cos(sn, cn, th, MPFR_RNDN);
      cs[static_cast<size_t>(2 * n)] = mpfr_get_d(cn, MPFR_RNDN);
      cs[static_cast<size_t>(2 * n + 1)] = mpfr_get_d(sn, MPFR_RNDN);
    } else {
      const long m = n / p;
      const double cp = cs[static_cast<size_t>(2 * p)];
      const double sp = cs[static_cast<size_t>(2 * p + 1)];
      const double cm = cs[static_cast<size_t>(2 * m)];
      const double sm = cs[static_cast<size_t>(2 * m + 1)];
      cs[static_cast<size_t>(2 * n)] = cp * cm - sp * sm;
      cs[static_cast<size_t>(2 * n + 1)] = cp * sm + sp * cm;
    }
  }

  const double logN = std::log(static_cast<double>(N)) * (1 + 1e-14);
  const double prime_err =
      rd::add_up(rd::mul_up(rd::mul_up(t_up, logN), std::ldexp(1.0, 3 - static_cast<int>(pw))),
                 rd::add_up(rd::mul_up(rd::mul_up(t.rad(), logN), 1.01), 0x1p-52));
  const int depth = 1 + static_cast<int>(std::ceil(std::log2(static_cast<double>(N))));
  double phase_rad = rd::mul_up(static_cast<double>(depth),
                                rd::add_up(prime_err, 0x1p-51));
  phase_rad = std::min(phase_rad, 2.125);

  // Anchor: log zeta(3/2+it) = sum over prime powers Lambda(n)/(n^{3/2+it} log n).
  {
    double are = 0, aim = 0, arad = 0, amaj = 0;
    for (long p : primes) {
      long long q = p;
      for (int k = 1; q < N; ++k, q *= p) {
        const double wq =
            1.0 / (k * std::pow(static_cast<double>(q), 1.5));
        are += wq * cs[static_cast<size_t>(2 * q)];
        aim += wq * cs[static_cast<size_t>(2 * q + 1)];
        arad += wq * (phase_rad + 0x1p-48);
        amaj += wq;
        if (q > (N - 1) / p) break;
      }
    }
    arad = rd::add_up(arad, rd::mul_up(amaj, 0x1p-33));
    const double tail = rd::mul_up(2.0 / std::sqrt(static_cast<double>(N - 1)),
                                   1 + 1e-12);
    anchor_ = BallComplex{BallReal::from_mid_rad(are, arad, prec_),
                          BallReal::from_mid_rad(aim, arad, prec_)};
    anchor_.re = widen(anchor_.re, tail);
    anchor_.im = widen(anchor_.im, tail);
  }

  MomentSums mom = moment_kernel(cs, N, jmax, phase_rad);
  cs.clear();
  cs.shrink_to_fit();
  spf.clear();
  spf.shrink_to_fit();

  // Direct-sum models: coeff_j = (-1)^j S_j for zeta, and
  // (-1)^{j+1} (j+1) S_{j+1} for zeta'.
  zeta_tm_ = TaylorModel::zero(d, kRadius, prec_);
  zeta_prime_tm_ = TaylorModel::zero(d, kRadius, prec_);
  for (int j = 0; j <= d; ++j) {
    const double sgn = (j % 2 == 0) ? 1.0 : -1.0;
    zeta_tm_.coeff[static_cast<size_t>(j)] = BallComplex{
        BallReal::from_mid_rad(sgn * mom.re[static_cast<size_t>(j)],
                               mom.rad[static_cast<size_t>(j)], prec_),
        BallReal::from_mid_rad(sgn * mom.im[static_cast<size_t>(j)],
                               mom.rad[static_cast<size_t>(j)], prec_)};
    BallComplex next{
        BallReal::from_mid_rad(-sgn * mom.re[static_cast<size_t>(j + 1)],
                               mom.rad[static_cast<size_t>(j + 1)], prec_),
        BallReal::from_mid_rad(-sgn * mom.im[static_cast<size_t>(j + 1)],
                               mom.rad[static_cast<size_t>(j + 1)], prec_)};
    zeta_prime_tm_.coeff[static_cast<size_t>(j)] = cmul_real(
        next, BallReal::from_long(j + 1, prec_), prec_);
  }
  const double n_pow_R = pow_up(static_cast<double>(N), kRadius);
  const double r_pow = pow_up(kRadius, d + 1);
  zeta_tm_.tail = rd::mul_up(
      r_pow, rd::mul_up(n_pow_R,
                        rd::mul_up(mom.maj[static_cast<size_t>(d + 1)],
                                   1 + 0x1p-40)));
  zeta_prime_tm_.tail = rd::mul_up(
      r_pow,
      rd::mul_up(n_pow_R, rd::mul_up(static_cast<double>(d + 2),
                                     rd::mul_up(mom.maj[static_cast<size_t>(d + 2)],
                                                1 + 0x1p-40))));

  // Boundary and Bernoulli corrections as models in v = s - c.
  const BallReal logN_b = BallReal::log_ui(static_cast<unsigned long>(N), prec_);
  const BallComplex c_ball{BallReal::from_double(kCenter, prec_), t_};
  const BallComplex one_c = BallComplex::from_real(BallReal::from_long(1, prec_));
  const TaylorModel expL = TaylorModel::exp_linear(
      cneg(BallComplex::from_real(logN_b)), d, kRadius, prec_);
  const BallComplex n_pow_1mc =
      cexp(cmul_real(csub(one_c, c_ball, prec_), logN_b, prec_), prec_);
  const BallComplex n_pow_mc = cdiv_real(n_pow_1mc, BallReal::from_long(N, prec_), prec_);

  // N^{1-s}/(s-1), derivative -N^{1-s}(logN/(s-1) + 1/(s-1)^2)
  const TaylorModel geo = TaylorModel::geometric(
      csub(c_ball, one_c, prec_), d, kRadius, prec_);
  zeta_tm_ = tm_add(zeta_tm_, tm_scale(tm_mul(expL, geo), n_pow_1mc));
  {
    TaylorModel inner = tm_add(tm_scale_real(geo, logN_b), tm_mul(geo, geo));
    zeta_prime_tm_ = tm_add(zeta_prime_tm_,
                            tm_scale(tm_mul(expL, inner), cneg(n_pow_1mc)));
  }

  // N^{-s}/2, derivative -logN N^{-s}/2
  {
    BallComplex half_pow = cmul_real(n_pow_mc, BallReal::from_double(0.5, prec_), prec_);
    zeta_tm_ = tm_add(zeta_tm_, tm_scale(expL, half_pow));
    zeta_prime_tm_ = tm_add(
        zeta_prime_tm_,
        tm_scale(tm_scale_real(expL, neg(logN_b)), half_pow));
  }

  // B_{2k}/(2k)! (s)_{2k-1} N^{1-s-2k}; derivative has the factor
  // (sum_j 1/(s+j) - log N).
  {
    TaylorModel poch = TaylorModel::linear(c_ball, one_c, d, kRadius, prec_);
    TaylorModel hsum = TaylorModel::geometric(c_ball, d, kRadius, prec_);
    const BallReal inv_n2 =
        ui_div(1, sqr(BallReal::from_long(N, prec_), prec_), prec_);
    BallComplex scale_pow = cmul_real(
        cmul_real(n_pow_1mc, ui_div(1, BallReal::from_long(N, prec_), prec_), prec_),
        ui_div(1, BallReal::from_long(N, prec_), prec_), prec_);  // N^{-1-c}
    const TaylorModel logN_tm =
        TaylorModel::constant(BallComplex::from_real(logN_b), d, kRadius, prec_);
    for (int k = 1; k <= M; ++k) {
      if (k > 1) {
        for (int j = 2 * k - 3; j <= 2 * k - 2; ++j) {
          BallComplex cj = cadd(
              c_ball,
              BallComplex::from_real(BallReal::from_long(j, prec_)), prec_);
          poch = tm_mul(poch, TaylorModel::linear(cj, one_c, d, kRadius, prec_));
          hsum = tm_add(hsum, TaylorModel::geometric(cj, d, kRadius, prec_));
        }
        scale_pow = cmul_real(scale_pow, inv_n2, prec_);
      }
      BallComplex beta = BallComplex::from_real(
          bernoulli_over_factorial(2 * k, prec_));
      TaylorModel term = tm_scale(tm_mul(poch, expL),
                                  cmul(beta, scale_pow, prec_));
      zeta_tm_ = tm_add(zeta_tm_, term);
      zeta_prime_tm_ = tm_add(zeta_prime_tm_,
                              tm_mul(term, tm_sub(hsum, logN_tm)));
    }
  }

  const double abs_c_up = cabs(c_ball, prec_).upper_d();
  zeta_tm_.tail = rd::add_up(
      zeta_tm_.tail,
      em_tail_sup(abs_c_up, kRadius, M, static_cast<double>(N),
                  kCenter - kRadius));
  zeta_prime_tm_.tail = rd::add_up(
      zeta_prime_tm_.tail,
      rd::mul_up(20.0, em_tail_sup(abs_c_up, kRadius + 0.05, M,
                                   static_cast<double>(N),
                                   kCenter - kRadius - 0.05)));
}

BallComplex SegmentEvaluator::zeta(double sigma) const {
  return zeta_tm_.eval_real(BallReal::from_double(sigma - kCenter, prec_));
}

BallComplex SegmentEvaluator::zeta_prime(double sigma) const {
  return zeta_prime_tm_.eval_real(BallReal::from_double(sigma - kCenter, prec_));
}

BallComplex SegmentEvaluator::log_zeta_at_1() const {
  // Anchor, refined per component by the model's log at 3/2 when that ball
  // separates from zero.
  BallComplex anchor = anchor_;
  {
    BallComplex z32 = zeta(1.5);
    if (cabs2(z32, prec_).sign() == Sign::positive) {
      BallComplex alt = clog(z32, prec_);
      if (alt.re.rad() < anchor.re.rad()) anchor.re = alt.re;
      if (alt.im.rad() < anchor.im.rad()) anchor.im = alt.im;
    }
  }

  const long panels = std::max<long>(cfg_.quad_nodes, prec_);
  const BallReal h = div(BallReal::from_double(0.5, prec_),
                         BallReal::from_long(panels, prec_), prec_);
  const double h_up = h.upper_d();
  const BallReal off = div(h, mul_ui(sqrt_ball(BallReal::from_long(3, prec_), prec_),
                                     2, prec_), prec_);  // h/(2 sqrt 3)
  BallComplex integral{BallReal::from_long(0, prec_), BallReal::from_long(0, prec_)};
  double err_total = 0;
  for (long i = 0; i < panels; ++i) {
    // Panel [1 + i h, 1 + (i+1) h]; v-coordinates are offset by -1/4 from
    // sigma - 1.
    BallReal center = add(BallReal::from_double(-0.25, prec_),
                          mul(add_ui(mul_ui(BallReal::from_long(i, prec_), 2, prec_),
                                     1, prec_),
                              div_ui(h, 2, prec_), prec_), prec_);
    // Sup of |zeta'/zeta| on the panel disc, for the Cauchy bound on f''''.
    BallComplex v_disc{
        BallReal::from_mid_rad(
            center.mid_d(),
            rd::add_up(rd::add_up(center.rad(), 0x1p-45),
                       rd::add_up(h_up / 2, kDiscPad)),
            prec_),
        BallReal::from_mid_rad(0.0, kDiscPad, prec_)};
    BallComplex zd = zeta_tm_.eval(v_disc);
    BallComplex zpd = zeta_prime_tm_.eval(v_disc);
    const double inf_z = cabs(zd, prec_).lower_d();
    if (!(inf_z > 0))
      throw UndecidedError(
          "quadrature panel cannot separate zeta from zero; increase prec");
    const double sup_ratio = rd::div_up(cabs(zpd, prec_).upper_d(), inf_z);
    // |E_panel| <= h^5 |f''''| / 4320 with |f''''| <= 24 sup/rho^4.
    const double f4 = rd::mul_up(24.0, rd::div_up(sup_ratio,
                                                  pow_dn(kDiscPad, 4.0)));
    err_total = rd::add_up(
        err_total, rd::mul_up(rd::div_up(pow_up(h_up, 5.0), 4320.0), f4));

    for (int node = 0; node < 2; ++node) {
      BallReal v = node == 0 ? sub(center, off, prec_) : add(center, off, prec_);
      BallComplex zv = zeta_tm_.eval_real(v);
      if (cabs2(zv, prec_).sign() != Sign::positive)
        throw UndecidedError(
            "quadrature node cannot separate zeta from zero; increase prec");
      BallComplex f = cdiv(zeta_prime_tm_.eval_real(v), zv, prec_);
      integral = cadd(integral, cmul_real(f, div_ui(h, 2, prec_), prec_), prec_);
    }
  }
  integral.re = widen(integral.re, err_total);
  integral.im = widen(integral.im, err_total);
  return csub(anchor, integral, prec_);
}

BallComplex log_zeta_one_line(const BallReal& t, const EvalConfig& cfg) {
  return SegmentEvaluator(t, cfg).log_zeta_at_1();
}

}  // namespace zetaline
