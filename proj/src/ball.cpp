#include "zetaline/ball.hpp"

#include <cfloat>
#include <cstdio>
#include <vector>

namespace zetaline {

namespace {

// RAII mpfr temporary.
class Tmp {
 public:
  explicit Tmp(long prec) { mpfr_init2(v_, BallReal::clamp_prec(prec)); }
  ~Tmp() { mpfr_clear(v_); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }
  operator mpfr_srcptr() const { return v_; }

 private:
  mpfr_t v_;
};

double ulp_of(mpfr_srcptr x) {
  if (!mpfr_number_p(x)) return INFINITY;
  if (mpfr_zero_p(x)) return DBL_TRUE_MIN;
  long e = static_cast<long>(mpfr_get_exp(x)) - static_cast<long>(mpfr_get_prec(x));
  if (e < -1074) return DBL_TRUE_MIN;
  if (e > 1020) return INFINITY;
  return std::ldexp(1.0, static_cast<int>(e));
}

long pick_prec(const BallReal& a, const BallReal& b, long prec) {
  if (prec > 0) return prec;
  return a.prec() > b.prec() ? a.prec() : b.prec();
}

long pick_prec(const BallReal& a, long prec) { return prec > 0 ? prec : a.prec(); }

}  // namespace

BallReal BallReal::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, long prec) {
  BallReal out(prec);
  if (!mpfr_number_p(lo) || !mpfr_number_p(hi)) {
    mpfr_set_zero(out.mid_, 1);
    out.rad_ = INFINITY;
    return out;
  }
  if (mpfr_equal_p(lo, hi)) {
    int t = mpfr_set(out.mid_, lo, MPFR_RNDN);
    out.rad_ = (t == 0) ? 0.0 : ulp_of(out.mid_);
    return out;
  }
  Tmp t(prec + 8);
  mpfr_add(t, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(t, t, 1, MPFR_RNDN);
  mpfr_set(out.mid_, t, MPFR_RNDN);
  Tmp d(64);
  mpfr_sub(d, hi, out.mid_, MPFR_RNDU);
  double d1 = mpfr_get_d(d, MPFR_RNDU);
  mpfr_sub(d, out.mid_, lo, MPFR_RNDU);
  double d2 = mpfr_get_d(d, MPFR_RNDU);
  double r = d1 > d2 ? d1 : d2;
  if (r < 0) r = 0;
  out.rad_ = rd::add_up(rd::up(r), ulp_of(out.mid_));
  return out;
}

BallReal BallReal::from_decimal(const std::string& text, long prec) {
  BallReal out(prec);
  const char* s = text.c_str();
  char* end = nullptr;
  int t = mpfr_strtofr(out.mid_, s, &end, 10, MPFR_RNDN);
  if (end == s) throw ParseError("not a number: '" + text + "'");
  while (*end == ' ' || *end == '\t') ++end;
  if (*end != '\0') throw ParseError("trailing characters in number: '" + text + "'");
  out.rad_ = (t == 0) ? 0.0 : ulp_of(out.mid_);
  return out;
}

BallReal BallReal::from_long(long v, long prec) {
  BallReal out(prec);
  int t = mpfr_set_si(out.mid_, v, MPFR_RNDN);
  out.rad_ = (t == 0) ? 0.0 : ulp_of(out.mid_);
  return out;
}

BallReal BallReal::from_ui(unsigned long v, long prec) {
  BallReal out(prec);
  int t = mpfr_set_ui(out.mid_, v, MPFR_RNDN);
  out.rad_ = (t == 0) ? 0.0 : ulp_of(out.mid_);
  return out;
}

BallReal BallReal::from_double(double v, long prec) {
  if (!std::isfinite(v)) throw DomainError("non-finite double");
  BallReal out(prec);
  int t = mpfr_set_d(out.mid_, v, MPFR_RNDN);
  out.rad_ = (t == 0) ? 0.0 : ulp_of(out.mid_);
  return out;
}

BallReal BallReal::from_mid_rad(double mid, double rad, long prec) {
  if (!std::isfinite(mid) || rad < 0) throw DomainError("bad mid/rad");
  BallReal out = from_double(mid, prec);
  out.rad_ = rd::add_up(out.rad_, rad);
  return out;
}

BallReal BallReal::pi(long prec) {
  BallReal y(prec), x = from_long(-1, prec);
  return atan2_ball(y, x, prec);
}

BallReal BallReal::euler_gamma(long prec) {
  BallReal out(prec);
  mpfr_const_euler(out.mid_, MPFR_RNDN);
  out.rad_ = ulp_of(out.mid_);
  return out;
}

BallReal BallReal::log_ui(unsigned long n, long prec) {
  if (n == 0) throw DomainError("log of zero");
  BallReal out(prec);
  if (n == 1) return out;
  int t = mpfr_log_ui(out.mid_, n, MPFR_RNDN);
  out.rad_ = (t == 0) ? 0.0 : ulp_of(out.mid_);
  return out;
}

double BallReal::lower_d() const {
  Tmp t(prec());
  lower(t);
  return mpfr_get_d(t, MPFR_RNDD);
}

double BallReal::upper_d() const {
  Tmp t(prec());
  upper(t);
  return mpfr_get_d(t, MPFR_RNDU);
}

Sign BallReal::sign() const {
  if (!is_finite()) return Sign::undecided;
  // Exact comparisons: mid > rad iff the whole ball is positive.
  if (mpfr_cmp_d(mid_, rad_) > 0) return Sign::positive;
  if (mpfr_cmp_d(mid_, -rad_) < 0) return Sign::negative;
  return Sign::undecided;
}

bool BallReal::contains(const BallReal& inner) const {
  long p = (prec() > inner.prec() ? prec() : inner.prec()) + 64;
  Tmp a(p), b(p);
  mpfr_sub_d(a, mid_, rad_, MPFR_RNDU);
  mpfr_sub_d(b, inner.mid_, inner.rad_, MPFR_RNDD);
  if (mpfr_greater_p(a, b)) return false;
  mpfr_add_d(a, inner.mid_, inner.rad_, MPFR_RNDU);
  mpfr_add_d(b, mid_, rad_, MPFR_RNDD);
  return !mpfr_greater_p(a, b);
}

bool BallReal::intersects(const BallReal& other) const {
  long p = (prec() > other.prec() ? prec() : other.prec()) + 64;
  Tmp a(p), b(p);
  mpfr_add_d(a, mid_, rad_, MPFR_RNDU);
  mpfr_sub_d(b, other.mid_, other.rad_, MPFR_RNDD);
  if (mpfr_less_p(a, b)) return false;  // certainly disjoint
  mpfr_add_d(a, other.mid_, other.rad_, MPFR_RNDU);
  mpfr_sub_d(b, mid_, rad_, MPFR_RNDD);
  return !mpfr_less_p(a, b);
}

bool BallReal::contains_si(long v) const {
  long p = prec() + 64;
  Tmp a(p);
  mpfr_sub_d(a, mid_, rad_, MPFR_RNDU);
  if (mpfr_cmp_si(a, v) > 0) return false;
  mpfr_add_d(a, mid_, rad_, MPFR_RNDD);
  return mpfr_cmp_si(a, v) >= 0;
}

int decimal_digits_for_prec(long prec) {
  return static_cast<int>(std::ceil(static_cast<double>(prec) * 0.30103)) + 2;
}

std::string BallReal::to_decimal() const { return to_decimal(decimal_digits_for_prec(prec())); }

std::string BallReal::to_decimal(int digits) const {
  if (digits < 2) digits = 2;
  std::vector<char> buf(static_cast<size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, mid_);
  return std::string(buf.data());
}

bool surely_lt(const BallReal& a, const BallReal& b) {
  long p = (a.prec() > b.prec() ? a.prec() : b.prec()) + 64;
  Tmp x(p), y(p);
  a.upper(x);
  b.lower(y);
  return mpfr_less_p(x, y);
}

bool surely_le(const BallReal& a, const BallReal& b) {
  long p = (a.prec() > b.prec() ? a.prec() : b.prec()) + 64;
  Tmp x(p), y(p);
  a.upper(x);
  b.lower(y);
  return mpfr_lessequal_p(x, y);
}

BallReal add(const BallReal& a, const BallReal& b, long prec) {
  long p = pick_prec(a, b, prec);
  Tmp alo(p), ahi(p), blo(p), bhi(p), lo(p), hi(p);
  a.lower(alo);
  a.upper(ahi);
  b.lower(blo);
  b.upper(bhi);
  mpfr_add(lo, alo, blo, MPFR_RNDD);
  mpfr_add(hi, ahi, bhi, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal sub(const BallReal& a, const BallReal& b, long prec) {
  long p = pick_prec(a, b, prec);
  Tmp alo(p), ahi(p), blo(p), bhi(p), lo(p), hi(p);
  a.lower(alo);
  a.upper(ahi);
  b.lower(blo);
  b.upper(bhi);
  mpfr_sub(lo, alo, bhi, MPFR_RNDD);
  mpfr_sub(hi, ahi, blo, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal mul(const BallReal& a, const BallReal& b, long prec) {
  long p = pick_prec(a, b, prec);
  Tmp alo(p), ahi(p), blo(p), bhi(p), lo(p), hi(p), t(p);
  a.lower(alo);
  a.upper(ahi);
  b.lower(blo);
  b.upper(bhi);
  mpfr_mul(lo, alo, blo, MPFR_RNDD);
  mpfr_mul(t, alo, bhi, MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_mul(t, ahi, blo, MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_mul(t, ahi, bhi, MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_mul(hi, alo, blo, MPFR_RNDU);
  mpfr_mul(t, alo, bhi, MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  mpfr_mul(t, ahi, blo, MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  mpfr_mul(t, ahi, bhi, MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal div(const BallReal& a, const BallReal& b, long prec) {
  if (b.sign() == Sign::undecided) throw DomainError("division by ball containing zero");
  long p = pick_prec(a, b, prec);
  Tmp alo(p), ahi(p), blo(p), bhi(p), lo(p), hi(p), t(p);
  a.lower(alo);
  a.upper(ahi);
  b.lower(blo);
  b.upper(bhi);
  mpfr_div(lo, alo, blo, MPFR_RNDD);
  mpfr_div(t, alo, bhi, MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_div(t, ahi, blo, MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_div(t, ahi, bhi, MPFR_RNDD);
  mpfr_min(lo, lo, t, MPFR_RNDD);
  mpfr_div(hi, alo, blo, MPFR_RNDU);
  mpfr_div(t, alo, bhi, MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  mpfr_div(t, ahi, blo, MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  mpfr_div(t, ahi, bhi, MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal add_ui(const BallReal& a, unsigned long b, long prec) {
  long p = pick_prec(a, prec);
  Tmp alo(p), ahi(p), lo(p), hi(p);
  a.lower(alo);
  a.upper(ahi);
  mpfr_add_ui(lo, alo, b, MPFR_RNDD);
  mpfr_add_ui(hi, ahi, b, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal sub_ui(const BallReal& a, unsigned long b, long prec) {
  long p = pick_prec(a, prec);
  Tmp alo(p), ahi(p), lo(p), hi(p);
  a.lower(alo);
  a.upper(ahi);
  mpfr_sub_ui(lo, alo, b, MPFR_RNDD);
  mpfr_sub_ui(hi, ahi, b, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal mul_ui(const BallReal& a, unsigned long b, long prec) {
  long p = pick_prec(a, prec);
  Tmp alo(p), ahi(p), lo(p), hi(p);
  a.lower(alo);
  a.upper(ahi);
  mpfr_mul_ui(lo, alo, b, MPFR_RNDD);
  mpfr_mul_ui(hi, ahi, b, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal div_ui(const BallReal& a, unsigned long b, long prec) {
  if (b == 0) throw DomainError("division by zero");
  long p = pick_prec(a, prec);
  Tmp alo(p), ahi(p), lo(p), hi(p);
  a.lower(alo);
  a.upper(ahi);
  mpfr_div_ui(lo, alo, b, MPFR_RNDD);
  mpfr_div_ui(hi, ahi, b, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal ui_div(unsigned long a, const BallReal& b, long prec) {
  if (b.sign() == Sign::undecided) throw DomainError("division by ball containing zero");
  long p = pick_prec(b, prec);
  Tmp blo(p), bhi(p), lo(p), hi(p);
  b.lower(blo);
  b.upper(bhi);
  // b is sign-definite, so a/b is monotone decreasing in b for a >= 0.
  mpfr_ui_div(lo, a, bhi, MPFR_RNDD);
  mpfr_ui_div(hi, a, blo, MPFR_RNDU);
  if (mpfr_greater_p(lo, hi)) mpfr_swap(lo, hi);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal mul_si(const BallReal& a, long b, long prec) {
  long p = pick_prec(a, prec);
  Tmp alo(p), ahi(p), lo(p), hi(p);
  a.lower(alo);
  a.upper(ahi);
  if (b >= 0) {
    mpfr_mul_si(lo, alo, b, MPFR_RNDD);
    mpfr_mul_si(hi, ahi, b, MPFR_RNDU);
  } else {
    mpfr_mul_si(lo, ahi, b, MPFR_RNDD);
    mpfr_mul_si(hi, alo, b, MPFR_RNDU);
  }
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal neg(const BallReal& a) {
  BallReal out(a.prec());
  mpfr_neg(out.mid_mut(), a.mid(), MPFR_RNDN);
  out.set_rad(a.rad());
  return out;
}

BallReal abs_ball(const BallReal& a) {
  switch (a.sign()) {
    case Sign::positive:
      return a;
    case Sign::negative:
      return neg(a);
    case Sign::undecided:
      break;
  }
  long p = a.prec();
  Tmp lo(p), hi(p), t(p);
  mpfr_set_zero(lo, 1);
  a.upper(hi);
  mpfr_abs(hi, hi, MPFR_RNDU);
  a.lower(t);
  mpfr_abs(t, t, MPFR_RNDU);
  mpfr_max(hi, hi, t, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal sqr(const BallReal& a, long prec) {
  long p = pick_prec(a, prec);
  Tmp alo(p), ahi(p), lo(p), hi(p), t(p);
  a.lower(alo);
  a.upper(ahi);
  if (mpfr_sgn(alo) >= 0) {
    mpfr_sqr(lo, alo, MPFR_RNDD);
    mpfr_sqr(hi, ahi, MPFR_RNDU);
  } else if (mpfr_sgn(ahi) <= 0) {
    mpfr_sqr(lo, ahi, MPFR_RNDD);
    mpfr_sqr(hi, alo, MPFR_RNDU);
  } else {
    mpfr_set_zero(lo, 1);
    mpfr_sqr(hi, ahi, MPFR_RNDU);
    mpfr_sqr(t, alo, MPFR_RNDU);
    mpfr_max(hi, hi, t, MPFR_RNDU);
  }
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal sqrt_ball(const BallReal& a, long prec) {
  long p = pick_prec(a, prec);
  Tmp alo(p), ahi(p), lo(p), hi(p);
  a.lower(alo);
  a.upper(ahi);
  if (mpfr_sgn(ahi) < 0) throw DomainError("sqrt of negative ball");
  // The repack slack can push a nonnegative quantity a hair below zero;
  // the exact operand is assumed to lie in the domain, so clip there.
  if (mpfr_sgn(alo) < 0) mpfr_set_zero(alo, 1);
  mpfr_sqrt(lo, alo, MPFR_RNDD);
  mpfr_sqrt(hi, ahi, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal exp_ball(const BallReal& a, long prec) {
  long p = pick_prec(a, prec);
  Tmp alo(p), ahi(p), lo(p), hi(p);
  a.lower(alo);
  a.upper(ahi);
  mpfr_exp(lo, alo, MPFR_RNDD);
  mpfr_exp(hi, ahi, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal log_ball(const BallReal& a, long prec) {
  long p = pick_prec(a, prec);
  Tmp alo(p), ahi(p), lo(p), hi(p);
  a.lower(alo);
  a.upper(ahi);
  if (mpfr_sgn(alo) <= 0) throw DomainError("log of ball reaching zero");
  mpfr_log(lo, alo, MPFR_RNDD);
  mpfr_log(hi, ahi, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal atan_ball(const BallReal& a, long prec) {
  long p = pick_prec(a, prec);
  Tmp alo(p), ahi(p), lo(p), hi(p);
  a.lower(alo);
  a.upper(ahi);
  mpfr_atan(lo, alo, MPFR_RNDD);
  mpfr_atan(hi, ahi, MPFR_RNDU);
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal atan2_ball(const BallReal& y, const BallReal& x, long prec) {
  long p = pick_prec(y, x, prec);
  if (y.is_exact() && x.is_exact()) {
    Tmp lo(p), hi(p);
    mpfr_atan2(lo, y.mid(), x.mid(), MPFR_RNDD);
    mpfr_atan2(hi, y.mid(), x.mid(), MPFR_RNDU);
    return BallReal::from_endpoints(lo, hi, p);
  }
  Sign sx = x.sign(), sy = y.sign();
  if (sx == Sign::undecided && sy == Sign::undecided)
    throw DomainError("atan2 of rectangle containing the origin");
  if (sx != Sign::positive && sy == Sign::undecided)
    throw DomainError("atan2 across the branch cut");
  // Origin outside the rectangle and no cut crossing: the angle attains its
  // extremes at corners.
  Tmp xlo(p), xhi(p), ylo(p), yhi(p), lo(p), hi(p), t(p);
  x.lower(xlo);
  x.upper(xhi);
  y.lower(ylo);
  y.upper(yhi);
  mpfr_srcptr xs[2] = {static_cast<mpfr_srcptr>(xlo), static_cast<mpfr_srcptr>(xhi)};
  mpfr_srcptr ys[2] = {static_cast<mpfr_srcptr>(ylo), static_cast<mpfr_srcptr>(yhi)};
  bool first = true;
  for (int i = 0; i < 2; i++) {
    for (int j = 0; j < 2; j++) {
      mpfr_atan2(t, ys[j], xs[i], MPFR_RNDD);
      if (first)
        mpfr_set(lo, t, MPFR_RNDD);
      else
        mpfr_min(lo, lo, t, MPFR_RNDD);
      mpfr_atan2(t, ys[j], xs[i], MPFR_RNDU);
      if (first)
        mpfr_set(hi, t, MPFR_RNDU);
      else
        mpfr_max(hi, hi, t, MPFR_RNDU);
      first = false;
    }
  }
  return BallReal::from_endpoints(lo, hi, p);
}

BallReal pow_ball(const BallReal& base, const BallReal& expo, long prec) {
  long p = pick_prec(base, expo, prec);
  return exp_ball(mul(expo, log_ball(base, p), p), p);
}

BallReal pow_si(const BallReal& base, long k, long prec) {
  long p = pick_prec(base, prec);
  if (k == 0) return BallReal::from_ui(1, p);
  Tmp blo(p), bhi(p), lo(p), hi(p);
  base.lower(blo);
  base.upper(bhi);
  if (mpfr_sgn(blo) <= 0) throw DomainError("pow_si needs a positive base");
  if (k > 0) {
    mpfr_pow_si(lo, blo, k, MPFR_RNDD);
    mpfr_pow_si(hi, bhi, k, MPFR_RNDU);
  } else {
    mpfr_pow_si(lo, bhi, k, MPFR_RNDD);
    mpfr_pow_si(hi, blo, k, MPFR_RNDU);
  }
  return BallReal::from_endpoints(lo, hi, p);
}

std::pair<BallReal, BallReal> sin_cos(const BallReal& a, long prec) {
  long p = pick_prec(a, prec);
  BallReal s(p), c(p);
  int t = mpfr_sin_cos(s.mid_mut(), c.mid_mut(), a.mid(), MPFR_RNDN);
  // |sin'|, |cos'| <= 1, so the input radius transfers unchanged; the
  // rounding of the midpoint adds at most one ulp.
  int ts = t % 4, tc = t / 4;  // ternary pair encoding
  if (a.is_exact() && ts == 0)
    s.set_rad(0);
  else
    s.set_rad(rd::add_up(a.rad(), ulp_of(s.mid())));
  if (a.is_exact() && tc == 0)
    c.set_rad(0);
  else
    c.set_rad(rd::add_up(a.rad(), ulp_of(c.mid())));
  return {std::move(s), std::move(c)};
}

BallReal hull(const BallReal& a, const BallReal& b, long prec) {
  long p = pick_prec(a, b, prec);
  Tmp alo(p), ahi(p), blo(p), bhi(p);
  a.lower(alo);
  a.upper(ahi);
  b.lower(blo);
  b.upper(bhi);
  mpfr_min(alo, alo, blo, MPFR_RNDD);
  mpfr_max(ahi, ahi, bhi, MPFR_RNDU);
  return BallReal::from_endpoints(alo, ahi, p);
}

BallReal widen(const BallReal& a, double extra_rad) {
  if (extra_rad < 0) throw DomainError("negative widening");
  BallReal out = a;
  out.set_rad(rd::add_up(out.rad(), extra_rad));
  return out;
}

namespace {
long pick_cprec(const BallComplex& a, const BallComplex& b, long prec) {
  if (prec > 0) return prec;
  return a.prec() > b.prec() ? a.prec() : b.prec();
}
long pick_cprec(const BallComplex& a, long prec) { return prec > 0 ? prec : a.prec(); }
}  // namespace

BallComplex cadd(const BallComplex& a, const BallComplex& b, long prec) {
  long p = pick_cprec(a, b, prec);
  return {add(a.re, b.re, p), add(a.im, b.im, p)};
}

BallComplex csub(const BallComplex& a, const BallComplex& b, long prec) {
  long p = pick_cprec(a, b, prec);
  return {sub(a.re, b.re, p), sub(a.im, b.im, p)};
}

BallComplex cmul(const BallComplex& a, const BallComplex& b, long prec) {
  long p = pick_cprec(a, b, prec);
  return {sub(mul(a.re, b.re, p), mul(a.im, b.im, p), p),
          add(mul(a.re, b.im, p), mul(a.im, b.re, p), p)};
}

BallComplex cdiv(const BallComplex& a, const BallComplex& b, long prec) {
  long p = pick_cprec(a, b, prec);
  BallReal den = cabs2(b, p);
  if (!den.is_positive()) throw DomainError("division by complex ball containing zero");
  BallComplex num = cmul(a, conj_ball(b), p);
  return {div(num.re, den, p), div(num.im, den, p)};
}

BallComplex cmul_real(const BallComplex& a, const BallReal& b, long prec) {
  long p = prec > 0 ? prec : (a.prec() > b.prec() ? a.prec() : b.prec());
  return {mul(a.re, b, p), mul(a.im, b, p)};
}

BallComplex cdiv_real(const BallComplex& a, const BallReal& b, long prec) {
  long p = prec > 0 ? prec : (a.prec() > b.prec() ? a.prec() : b.prec());
  return {div(a.re, b, p), div(a.im, b, p)};
}

BallComplex cneg(const BallComplex& a) { return {neg(a.re), neg(a.im)}; }

BallComplex conj_ball(const BallComplex& a) { return {a.re, neg(a.im)}; }

BallComplex csqr(const BallComplex& a, long prec) {
  long p = pick_cprec(a, prec);
  return {sub(sqr(a.re, p), sqr(a.im, p), p), mul_ui(mul(a.re, a.im, p), 2, p)};
}

BallComplex cexp(const BallComplex& a, long prec) {
  long p = pick_cprec(a, prec);
  BallReal r = exp_ball(a.re, p);
  auto [s, c] = sin_cos(a.im, p);
  return {mul(r, c, p), mul(r, s, p)};
}

BallReal cabs2(const BallComplex& a, long prec) {
  long p = pick_cprec(a, prec);
  return add(sqr(a.re, p), sqr(a.im, p), p);
}

BallReal cabs(const BallComplex& a, long prec) {
  long p = pick_cprec(a, prec);
  return sqrt_ball(cabs2(a, p), p);
}

BallComplex clog(const BallComplex& a, long prec) {
  long p = pick_cprec(a, prec);
  BallReal r2 = cabs2(a, p);
  if (!r2.is_positive()) throw DomainError("log of complex ball containing zero");
  BallReal lr = div_ui(log_ball(r2, p), 2, p);
  BallReal th = atan2_ball(a.im, a.re, p);
  return {std::move(lr), std::move(th)};
}

BallComplex cpow_real_base(const BallReal& base, const BallComplex& s, long prec) {
  long p = prec > 0 ? prec : (s.prec() > base.prec() ? s.prec() : base.prec());
  BallReal lb = log_ball(base, p);
  return cexp(cmul_real(s, lb, p), p);
}

}  // namespace zetaline
