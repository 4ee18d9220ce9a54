#pragma once

#ifndef MPFR_USE_NO_MACRO
#define MPFR_USE_NO_MACRO
#endif
#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace zetaline {

inline constexpr long kDefaultPrec = 128;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : Error { using Error::Error; };
struct PoleError : Error { using Error::Error; };
struct ArgumentError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct UndecidedError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct CoverageError : Error { using Error::Error; };
struct ProximityError : Error { using Error::Error; };
struct FetchError : Error { using Error::Error; };

// Upward-directed double arithmetic for radii. nextafter compensates the
// round-to-nearest step, so each helper returns an upper bound of the exact
// result (and bumps underflown products off zero).
namespace rd {
inline double up(double x) { return std::nextafter(x, INFINITY); }
inline double add_up(double a, double b) { return up(a + b); }
inline double mul_up(double a, double b) { return up(a * b); }
inline double div_up(double a, double b) { return up(a / b); }
inline double down(double x) { return std::nextafter(x, -INFINITY); }
}  // namespace rd

enum class Sign { negative, undecided, positive };

// Midpoint-radius interval: mid is an MPFR float at an explicit precision,
// rad a double. Every operation returns a ball containing the exact image of
// its input balls. Ops are routed through directed-rounded endpoints plus a
// one-ulp outward repack, which keeps enclosures nested when the same
// expression is reevaluated at higher precision.
class BallReal {
 public:
  BallReal() : BallReal(kDefaultPrec) {}
  explicit BallReal(long prec) : rad_(0) {
    mpfr_init2(mid_, clamp_prec(prec));
    mpfr_set_zero(mid_, 1);
  }
  BallReal(const BallReal& o) : rad_(o.rad_) {
    mpfr_init2(mid_, mpfr_get_prec(o.mid_));
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
  }
  BallReal(BallReal&& o) noexcept : rad_(o.rad_) {
    mpfr_init2(mid_, 2);
    mpfr_swap(mid_, o.mid_);
  }
  BallReal& operator=(const BallReal& o) {
    if (this != &o) {
      mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
      mpfr_set(mid_, o.mid_, MPFR_RNDN);
      rad_ = o.rad_;
    }
    return *this;
  }
  BallReal& operator=(BallReal&& o) noexcept {
    if (this != &o) {
      mpfr_swap(mid_, o.mid_);
      rad_ = o.rad_;
    }
    return *this;
  }
  ~BallReal() { mpfr_clear(mid_); }

  static long clamp_prec(long prec) { return prec < 8 ? 8 : prec; }

  static BallReal from_decimal(const std::string& text, long prec = kDefaultPrec);
  static BallReal from_long(long v, long prec = kDefaultPrec);
  static BallReal from_ui(unsigned long v, long prec = kDefaultPrec);
  static BallReal from_double(double v, long prec = kDefaultPrec);  // exact
  static BallReal from_mid_rad(double mid, double rad, long prec = kDefaultPrec);
  static BallReal pi(long prec = kDefaultPrec);           // via atan2(0, -1)
  static BallReal euler_gamma(long prec = kDefaultPrec);  // certified constant
  static BallReal log_ui(unsigned long n, long prec = kDefaultPrec);
  // Ball spanning [lo, hi] (arguments need not be at the target precision).
  static BallReal from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, long prec);

  mpfr_srcptr mid() const { return mid_; }
  mpfr_ptr mid_mut() { return mid_; }
  double rad() const { return rad_; }
  void set_rad(double r) { rad_ = r; }
  long prec() const { return mpfr_get_prec(mid_); }
  bool is_exact() const { return rad_ == 0; }
  bool is_finite() const { return mpfr_number_p(mid_) && std::isfinite(rad_); }

  double mid_d() const { return mpfr_get_d(mid_, MPFR_RNDN); }
  double lower_d() const;  // rigorous lower bound as double
  double upper_d() const;
  void lower(mpfr_ptr out) const { mpfr_sub_d(out, mid_, rad_, MPFR_RNDD); }
  void upper(mpfr_ptr out) const { mpfr_add_d(out, mid_, rad_, MPFR_RNDU); }

  Sign sign() const;
  bool is_positive() const { return sign() == Sign::positive; }
  bool is_negative() const { return sign() == Sign::negative; }
  bool contains_zero() const { return sign() == Sign::undecided; }
  bool contains(const BallReal& inner) const;
  bool intersects(const BallReal& other) const;
  bool contains_si(long v) const;

  // Decimal with enough digits to round-trip at this precision.
  std::string to_decimal() const;
  std::string to_decimal(int digits) const;

  friend BallReal add(const BallReal& a, const BallReal& b, long prec);
  friend BallReal sub(const BallReal& a, const BallReal& b, long prec);
  friend BallReal mul(const BallReal& a, const BallReal& b, long prec);
  friend BallReal div(const BallReal& a, const BallReal& b, long prec);
  friend BallReal add_ui(const BallReal& a, unsigned long b, long prec);
  friend BallReal sub_ui(const BallReal& a, unsigned long b, long prec);
  friend BallReal mul_ui(const BallReal& a, unsigned long b, long prec);
  friend BallReal div_ui(const BallReal& a, unsigned long b, long prec);
  friend BallReal ui_div(unsigned long a, const BallReal& b, long prec);
  friend BallReal mul_si(const BallReal& a, long b, long prec);
  friend BallReal neg(const BallReal& a);
  friend BallReal abs_ball(const BallReal& a);
  friend BallReal sqr(const BallReal& a, long prec);
  friend BallReal sqrt_ball(const BallReal& a, long prec);
  friend BallReal exp_ball(const BallReal& a, long prec);
  friend BallReal log_ball(const BallReal& a, long prec);
  friend BallReal atan_ball(const BallReal& a, long prec);
  friend BallReal atan2_ball(const BallReal& y, const BallReal& x, long prec);
  friend BallReal pow_ball(const BallReal& base, const BallReal& expo, long prec);
  friend BallReal pow_si(const BallReal& base, long k, long prec);
  friend std::pair<BallReal, BallReal> sin_cos(const BallReal& a, long prec);
  friend BallReal hull(const BallReal& a, const BallReal& b, long prec);
  friend BallReal widen(const BallReal& a, double extra_rad);

 private:
  mpfr_t mid_;
  double rad_;
};

BallReal add(const BallReal& a, const BallReal& b, long prec = 0);
BallReal sub(const BallReal& a, const BallReal& b, long prec = 0);
BallReal mul(const BallReal& a, const BallReal& b, long prec = 0);
BallReal div(const BallReal& a, const BallReal& b, long prec = 0);
BallReal add_ui(const BallReal& a, unsigned long b, long prec = 0);
BallReal sub_ui(const BallReal& a, unsigned long b, long prec = 0);
BallReal mul_ui(const BallReal& a, unsigned long b, long prec = 0);
BallReal div_ui(const BallReal& a, unsigned long b, long prec = 0);
BallReal ui_div(unsigned long a, const BallReal& b, long prec = 0);
BallReal mul_si(const BallReal& a, long b, long prec = 0);
BallReal neg(const BallReal& a);
BallReal abs_ball(const BallReal& a);
BallReal sqr(const BallReal& a, long prec = 0);
BallReal sqrt_ball(const BallReal& a, long prec = 0);
BallReal exp_ball(const BallReal& a, long prec = 0);
BallReal log_ball(const BallReal& a, long prec = 0);
BallReal atan_ball(const BallReal& a, long prec = 0);
BallReal atan2_ball(const BallReal& y, const BallReal& x, long prec = 0);
BallReal pow_ball(const BallReal& base, const BallReal& expo, long prec = 0);
BallReal pow_si(const BallReal& base, long k, long prec = 0);
std::pair<BallReal, BallReal> sin_cos(const BallReal& a, long prec = 0);
BallReal hull(const BallReal& a, const BallReal& b, long prec = 0);
BallReal widen(const BallReal& a, double extra_rad);

inline BallReal operator+(const BallReal& a, const BallReal& b) { return add(a, b); }
inline BallReal operator-(const BallReal& a, const BallReal& b) { return sub(a, b); }
inline BallReal operator*(const BallReal& a, const BallReal& b) { return mul(a, b); }
inline BallReal operator/(const BallReal& a, const BallReal& b) { return div(a, b); }
inline BallReal operator-(const BallReal& a) { return neg(a); }

// Certified sign of (a - b) without forming the difference ball.
bool surely_lt(const BallReal& a, const BallReal& b);
bool surely_le(const BallReal& a, const BallReal& b);

// Complex ball as an axis-aligned rectangle.
class BallComplex {
 public:
  BallComplex() = default;
  explicit BallComplex(long prec) : re(prec), im(prec) {}
  BallComplex(BallReal r, BallReal i) : re(std::move(r)), im(std::move(i)) {}
  static BallComplex from_real(const BallReal& r) {
    return BallComplex(r, BallReal(r.prec()));
  }

  BallReal re, im;

  long prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  bool contains_zero_strict() const { return re.contains_zero() && im.contains_zero(); }
  bool contains(const BallComplex& inner) const {
    return re.contains(inner.re) && im.contains(inner.im);
  }
  bool intersects(const BallComplex& o) const {
    return re.intersects(o.re) && im.intersects(o.im);
  }
};

BallComplex cadd(const BallComplex& a, const BallComplex& b, long prec = 0);
BallComplex csub(const BallComplex& a, const BallComplex& b, long prec = 0);
BallComplex cmul(const BallComplex& a, const BallComplex& b, long prec = 0);
BallComplex cdiv(const BallComplex& a, const BallComplex& b, long prec = 0);
BallComplex cmul_real(const BallComplex& a, const BallReal& b, long prec = 0);
BallComplex cdiv_real(const BallComplex& a, const BallReal& b, long prec = 0);
BallComplex cneg(const BallComplex& a);
BallComplex conj_ball(const BallComplex& a);
BallComplex csqr(const BallComplex& a, long prec = 0);
BallComplex cexp(const BallComplex& a, long prec = 0);
BallComplex clog(const BallComplex& a, long prec = 0);  // principal branch
BallReal cabs(const BallComplex& a, long prec = 0);
BallReal cabs2(const BallComplex& a, long prec = 0);
// base^s for a positive real base.
BallComplex cpow_real_base(const BallReal& base, const BallComplex& s, long prec = 0);

inline BallComplex operator+(const BallComplex& a, const BallComplex& b) { return cadd(a, b); }
inline BallComplex operator-(const BallComplex& a, const BallComplex& b) { return csub(a, b); }
inline BallComplex operator*(const BallComplex& a, const BallComplex& b) { return cmul(a, b); }
inline BallComplex operator/(const BallComplex& a, const BallComplex& b) { return cdiv(a, b); }
inline BallComplex operator-(const BallComplex& a) { return cneg(a); }

int decimal_digits_for_prec(long prec);

}  // namespace zetaline
