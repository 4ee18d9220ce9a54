#include "zetaline/series.hpp"

namespace zetaline {

namespace {

void require_compatible(const TaylorModel& a, const TaylorModel& b) {
  if (a.radius != b.radius || a.prec != b.prec)
    throw ArgumentError("taylor models disagree on radius or precision");
}

double abs_upper(const BallComplex& z) { return cabs(z).upper_d(); }

}  // namespace

TaylorModel TaylorModel::zero(int degree, double radius, long prec) {
  if (degree < 0 || radius <= 0) throw ArgumentError("bad taylor model shape");
  TaylorModel t;
  t.coeff.assign(static_cast<size_t>(degree) + 1, BallComplex(prec));
  t.radius = radius;
  t.prec = prec;
  return t;
}

TaylorModel TaylorModel::constant(const BallComplex& c0, int degree, double radius, long prec) {
  TaylorModel t = zero(degree, radius, prec);
  t.coeff[0] = c0;
  return t;
}

TaylorModel TaylorModel::linear(const BallComplex& c0, const BallComplex& c1, int degree,
                                double radius, long prec) {
  if (degree < 1) throw ArgumentError("linear model needs degree >= 1");
  TaylorModel t = zero(degree, radius, prec);
  t.coeff[0] = c0;
  t.coeff[1] = c1;
  return t;
}

TaylorModel TaylorModel::exp_linear(const BallComplex& a, int degree, double radius, long prec) {
  TaylorModel t = zero(degree, radius, prec);
  BallComplex term = BallComplex::from_real(BallReal::from_ui(1, prec));
  t.coeff[0] = term;
  for (int k = 1; k <= degree; k++) {
    term = cdiv_real(cmul(term, a, prec), BallReal::from_ui(static_cast<unsigned long>(k), prec),
                     prec);
    t.coeff[k] = term;
  }
  // sum_{k>d} |a v|^k / k!  <=  (|a|R)^{d+1}/(d+1)! * e^{|a|R}
  BallReal x = mul(cabs(a, 64), BallReal::from_double(radius, 64), 64);
  BallReal fac = BallReal::from_ui(1, 64);
  BallReal pw = BallReal::from_ui(1, 64);
  for (int k = 1; k <= degree + 1; k++) {
    fac = mul_ui(fac, static_cast<unsigned long>(k), 64);
    pw = mul(pw, x, 64);
  }
  t.tail = mul(div(pw, fac, 64), exp_ball(x, 64), 64).upper_d();
  return t;
}

TaylorModel TaylorModel::geometric(const BallComplex& c, int degree, double radius, long prec) {
  BallReal ac = cabs(c, 64);
  double clo = ac.lower_d();
  if (!(clo > radius)) throw ArgumentError("geometric model needs |c| > radius");
  TaylorModel t = zero(degree, radius, prec);
  BallComplex inv_c = cdiv(BallComplex::from_real(BallReal::from_ui(1, prec)),
                           BallComplex(c.re, c.im), prec);
  BallComplex term = inv_c;
  t.coeff[0] = term;
  for (int k = 1; k <= degree; k++) {
    term = cneg(cmul(term, inv_c, prec));
    t.coeff[k] = term;
  }
  // |c|^{-1} r^{d+1} / (1-r) with r = R/|c| < 1
  BallReal r = div(BallReal::from_double(radius, 64), ac, 64);
  BallReal num = BallReal::from_ui(1, 64);
  for (int k = 0; k <= degree; k++) num = mul(num, r, 64);
  num = mul(num, r, 64);
  BallReal den = mul(ac, sub(BallReal::from_ui(1, 64), r, 64), 64);
  if (!den.is_positive()) throw ArgumentError("geometric tail ratio reached 1");
  t.tail = div(num, den, 64).upper_d();
  return t;
}

double TaylorModel::poly_norm() const {
  double s = 0, pw = 1;
  for (const BallComplex& c : coeff) {
    s = rd::add_up(s, rd::mul_up(abs_upper(c), pw));
    pw = rd::mul_up(pw, radius);
  }
  return s;
}

double TaylorModel::sup_norm() const { return rd::add_up(poly_norm(), tail); }

BallComplex TaylorModel::eval(const BallComplex& v) const {
  if (!(cabs(v, 64).upper_d() <= radius)) throw ArgumentError("eval outside model radius");
  BallComplex acc = coeff.back();
  for (int k = degree() - 1; k >= 0; k--) acc = cadd(cmul(acc, v, prec), coeff[k], prec);
  acc.re = widen(acc.re, tail);
  acc.im = widen(acc.im, tail);
  return acc;
}

BallComplex TaylorModel::eval_real(const BallReal& v) const {
  if (!(abs_ball(v).upper_d() <= radius)) throw ArgumentError("eval outside model radius");
  BallComplex acc = coeff.back();
  for (int k = degree() - 1; k >= 0; k--) acc = cadd(cmul_real(acc, v, prec), coeff[k], prec);
  acc.re = widen(acc.re, tail);
  acc.im = widen(acc.im, tail);
  return acc;
}

TaylorModel tm_add(const TaylorModel& a, const TaylorModel& b) {
  require_compatible(a, b);
  const TaylorModel& big = a.degree() >= b.degree() ? a : b;
  const TaylorModel& small = a.degree() >= b.degree() ? b : a;
  TaylorModel t = big;
  for (int k = 0; k <= small.degree(); k++) t.coeff[k] = cadd(t.coeff[k], small.coeff[k], t.prec);
  t.tail = rd::add_up(a.tail, b.tail);
  return t;
}

TaylorModel tm_sub(const TaylorModel& a, const TaylorModel& b) {
  return tm_add(a, tm_scale_real(b, BallReal::from_long(-1, b.prec)));
}

TaylorModel tm_mul(const TaylorModel& a, const TaylorModel& b) {
  require_compatible(a, b);
  int d = a.degree() > b.degree() ? a.degree() : b.degree();
  TaylorModel t = TaylorModel::zero(d, a.radius, a.prec);
  double spill = 0;
  std::vector<double> apow(static_cast<size_t>(a.degree()) + 1);
  std::vector<double> bpow(static_cast<size_t>(b.degree()) + 1);
  {
    double pw = 1;
    for (int i = 0; i <= a.degree(); i++) {
      apow[i] = rd::mul_up(abs_upper(a.coeff[i]), pw);
      pw = rd::mul_up(pw, a.radius);
    }
    pw = 1;
    for (int j = 0; j <= b.degree(); j++) {
      bpow[j] = rd::mul_up(abs_upper(b.coeff[j]), pw);
      pw = rd::mul_up(pw, b.radius);
    }
  }
  for (int i = 0; i <= a.degree(); i++) {
    for (int j = 0; j <= b.degree(); j++) {
      if (i + j <= d) {
        t.coeff[i + j] = cadd(t.coeff[i + j], cmul(a.coeff[i], b.coeff[j], t.prec), t.prec);
      } else {
        spill = rd::add_up(spill, rd::mul_up(apow[i], bpow[j]));
      }
    }
  }
  double na = a.poly_norm(), nb = b.poly_norm();
  t.tail = rd::add_up(spill, rd::add_up(rd::mul_up(a.tail, rd::add_up(nb, b.tail)),
                                        rd::mul_up(b.tail, na)));
  return t;
}

TaylorModel tm_scale(const TaylorModel& a, const BallComplex& s) {
  TaylorModel t = a;
  for (BallComplex& c : t.coeff) c = cmul(c, s, t.prec);
  t.tail = rd::mul_up(a.tail, abs_upper(s));
  return t;
}

TaylorModel tm_scale_real(const TaylorModel& a, const BallReal& s) {
  TaylorModel t = a;
  for (BallComplex& c : t.coeff) c = cmul_real(c, s, t.prec);
  t.tail = rd::mul_up(a.tail, abs_ball(s).upper_d());
  return t;
}

TaylorModel tm_widen(const TaylorModel& a, double extra_tail) {
  if (extra_tail < 0) throw ArgumentError("negative tail widening");
  TaylorModel t = a;
  t.tail = rd::add_up(t.tail, extra_tail);
  return t;
}

}  // namespace zetaline
