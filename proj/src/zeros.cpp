#include "zetaline/zeros.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <string>

namespace zetaline {

namespace {

constexpr double kProximity = 1e-3;
constexpr double kTailGate = 1e9;
constexpr std::size_t kChunk = 4096;

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_real(const std::string& s, double* out) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0' || errno == ERANGE ||
      !std::isfinite(v))
    return false;
  *out = v;
  return true;
}

BallReal sum_chunk(const std::vector<BallReal>& ords, std::size_t b,
                   std::size_t e, const BallReal& a, const BallReal& a2,
                   const BallReal& t, long p) {
  BallReal acc = BallReal::from_long(0, p);
  for (std::size_t i = b; i < e; ++i) {
    BallReal dm = sub(t, ords[i], p);
    BallReal dp = add(t, ords[i], p);
    BallReal t1 = div(a, add(a2, sqr(dm, p), p), p);
    BallReal t2 = div(a, add(a2, sqr(dp, p), p), p);
    acc = add(acc, add(t1, t2, p), p);
  }
  return acc;
}

void validate_sum_args(const ZeroTable& table, double alpha, double t,
                       double T) {
  if (!(alpha >= 1.0 && alpha <= 1.5))
    throw ArgumentError("partial_zero_sum: alpha must lie in [1, 3/2]");
  if (!(t >= 0.0))
    throw ArgumentError("partial_zero_sum: t must be nonnegative");
  if (T > table.claimed_complete_to())
    throw CoverageError("partial_zero_sum: T = " + std::to_string(T) +
                        " beyond claimed completeness " +
                        std::to_string(table.claimed_complete_to()));
}

}  // namespace

ZeroTable::ZeroTable(std::vector<BallReal> ordinates, std::string source,
                     double claimed_complete_to, double accuracy)
    : ords_(std::move(ordinates)),
      source_(std::move(source)),
      complete_to_(claimed_complete_to),
      accuracy_(accuracy) {
  if (ords_.empty()) throw ParseError("zero table: no ordinates");
  if (!(ords_.front().lower_d() > 14.0))
    throw ParseError("zero table: first ordinate must exceed 14");
  for (std::size_t i = 1; i < ords_.size(); ++i) {
    if (!(ords_[i - 1].mid_d() < ords_[i].mid_d()))
      throw ParseError("zero table: not strictly increasing at entry " +
                       std::to_string(i + 1));
  }
  if (!(accuracy_ >= 0.0)) throw ParseError("zero table: negative accuracy");
  if (!(complete_to_ <= gamma_max()))
    throw ParseError("zero table: claimed_complete_to " +
                     std::to_string(complete_to_) + " exceeds gamma_max " +
                     std::to_string(gamma_max()));

  // Riemann-von Mangoldt density envelope, deliberately loose
  const double two_pi = 6.283185307179586;
  std::vector<double> grid;
  if (complete_to_ > 20.0) {
    const int pts = 24;
    for (int i = 0; i <= pts; ++i)
      grid.push_back(20.0 *
                     std::pow(complete_to_ / 20.0, double(i) / pts));
  } else {
    grid.push_back(complete_to_);
  }
  for (double h : grid) {
    double cnt = static_cast<double>(count_below(h));
    double main = h / two_pi * std::log(h / (two_pi * 2.718281828459045)) +
                  7.0 / 8.0;
    if (std::abs(cnt - main) > 0.15 * std::log(h) + 3.0)
      throw ParseError("zero table: count near H=" + std::to_string(h) +
                       " is " + std::to_string((long)cnt) +
                       ", expected about " + std::to_string(main) +
                       "; table looks corrupted");
  }
}

std::size_t ZeroTable::count_below(double h) const {
  std::size_t lo = 0, hi = ords_.size();
  while (lo < hi) {
    std::size_t m = lo + (hi - lo) / 2;
    if (ords_[m].mid_d() <= h)
      lo = m + 1;
    else
      hi = m;
  }
  return lo;
}

ZeroTable load_zeros(const std::string& path, ZeroFormat format) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open zero file: " + path);

  std::string source = path;
  double complete_to = std::nan("");
  double accuracy = 1e-9;
  std::vector<BallReal> ords;
  std::string line;
  long lineno = 0;
  double prev = 0.0;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = path + ":" + std::to_string(lineno);
    std::string s = trimmed(line);
    if (s.empty()) throw ParseError(where + ": blank line");
    if (s[0] == '#') {
      if (format != ZeroFormat::commented)
        throw ParseError(where + ": comment in plain-format file");
      std::string rest = trimmed(s.substr(1));
      std::size_t colon = rest.find(':');
      if (colon == std::string::npos) continue;
      std::string key = trimmed(rest.substr(0, colon));
      std::string val = trimmed(rest.substr(colon + 1));
      if (key == "source") {
        source = val;
      } else if (key == "complete_to") {
        if (!parse_real(val, &complete_to))
          throw ParseError(where + ": cannot parse complete_to");
      } else if (key == "accuracy") {
        if (!parse_real(val, &accuracy) || accuracy < 0.0)
          throw ParseError(where + ": cannot parse accuracy");
      }
      continue;
    }
    double v = 0.0;
    if (!parse_real(s, &v))
      throw ParseError(where + ": cannot parse ordinate '" + s + "'");
    if (!ords.empty() && !(v > prev))
      throw ParseError(where + ": ordinates must be strictly increasing");
    if (ords.empty() && !(v > 14.0))
      throw ParseError(where + ": first ordinate must exceed 14");
    prev = v;
    ords.push_back(BallReal::from_decimal(s, 96));
  }
  if (ords.empty()) throw ParseError(path + ": no ordinates");

  for (BallReal& o : ords) o = widen(o, accuracy);
  if (std::isnan(complete_to)) complete_to = ords.back().upper_d();
  return ZeroTable(std::move(ords), source, complete_to, accuracy);
}

BallReal partial_zero_sum_serial(const ZeroTable& table, double alpha,
                                 double t, double T, long prec) {
  validate_sum_args(table, alpha, t, T);
  const long p = BallReal::clamp_prec(prec);
  BallReal a = sub(BallReal::from_double(alpha, p),
                   BallReal::from_double(0.5, p), p);
  BallReal a2 = sqr(a, p);
  return sum_chunk(table.ordinates(), 0, table.count_below(T), a, a2,
                   BallReal::from_double(t, p), p);
}

BallReal partial_zero_sum(const ZeroTable& table, double alpha, double t,
                          double T, long prec) {
  validate_sum_args(table, alpha, t, T);
  const long p = BallReal::clamp_prec(prec);
  BallReal a = sub(BallReal::from_double(alpha, p),
                   BallReal::from_double(0.5, p), p);
  BallReal a2 = sqr(a, p);
  BallReal t_ball = BallReal::from_double(t, p);

  const std::size_t n = table.count_below(T);
  const std::size_t nchunks = (n + kChunk - 1) / kChunk;
  if (nchunks <= 1)
    return sum_chunk(table.ordinates(), 0, n, a, a2, t_ball, p);

  std::vector<BallReal> parts(nchunks, BallReal::from_long(0, p));
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < static_cast<long>(nchunks); ++c) {
    std::size_t b = static_cast<std::size_t>(c) * kChunk;
    std::size_t e = b + kChunk < n ? b + kChunk : n;
    parts[c] = sum_chunk(table.ordinates(), b, e, a, a2, t_ball, p);
  }
  BallReal acc = BallReal::from_long(0, p);
  for (const BallReal& part : parts) acc = add(acc, part, p);
  return acc;
}

BallReal tail_square_bound(double T, bool below_gate_ok, long prec) {
  if (!(T > 0.0))
    throw ArgumentError("tail_square_bound: T must be positive");
  if (T < kTailGate && !below_gate_ok)
    throw ArgumentError(
        "tail_square_bound: T below 1e9 needs below_gate_ok (the envelope's "
        "cited validity starts there)");
  const long p = BallReal::clamp_prec(prec);
  BallReal tb = BallReal::from_double(T, p);
  BallReal two_pi = mul_ui(BallReal::pi(p), 2, p);
  BallReal log_ratio = sub(log_ball(tb, p), log_ball(two_pi, p), p);
  BallReal first = div(add_ui(log_ratio, 1, p), mul(two_pi, tb, p), p);
  BallReal c14 = div_ui(BallReal::from_ui(14, p), 100, p);
  BallReal c56 = div_ui(BallReal::from_ui(56, p), 100, p);
  BallReal second =
      div(add(c14, mul(c56, log_ball(tb, p), p), p), sqr(tb, p), p);
  return add(first, second, p);
}

std::pair<BallReal, BallReal> e_enclosure(const ZeroTable& table, double t,
                                          double T, long prec) {
  if (!(t >= 0.0))
    throw ArgumentError("e_enclosure: t must be nonnegative");
  const std::vector<BallReal>& ords = table.ordinates();
  const double top_lo = ords.back().lower_d();
  if (!(t < top_lo))
    throw CoverageError("e_enclosure: t = " + std::to_string(t) +
                        " not below the table top");

  // proximity to the nearest ordinates
  std::size_t idx = table.count_below(t);
  for (std::size_t i = (idx > 0 ? idx - 1 : 0);
       i < ords.size() && i <= idx + 1; ++i) {
    if (std::abs(ords[i].mid_d() - t) < kProximity + ords[i].rad())
      throw ProximityError("e_enclosure: t within 1e-3 of ordinate " +
                           std::to_string(i + 1));
  }

  const long p = BallReal::clamp_prec(prec);
  BallReal t_ball = BallReal::from_double(t, p);
  BallReal lower = BallReal::from_long(0, p);
  for (std::size_t i = table.count_below(T); i < ords.size(); ++i) {
    BallReal dm = sub(ords[i], t_ball, p);
    BallReal dp = add(ords[i], t_ball, p);
    lower = add(lower, add(ui_div(1, sqr(dm, p), p),
                           ui_div(1, sqr(dp, p), p), p),
                p);
  }

  BallReal delta = sub(BallReal::from_ui(1, p),
                       div(t_ball, BallReal::from_double(top_lo, p), p), p);
  if (delta.sign() != Sign::positive)
    throw CoverageError("e_enclosure: t too close to the table top");
  BallReal factor = add_ui(ui_div(1, sqr(delta, p), p), 1, p);
  BallReal env = mul(factor, tail_square_bound(top_lo, true, p), p);
  return {lower, add(lower, env, p)};
}

BallReal lemma21_check(const ZeroTable& table, double alpha, double t,
                       double T, const EvalConfig& cfg, bool relaxed) {
  if (t < 1e6 && !relaxed)
    throw ArgumentError(
        "lemma21_check: t below 1e6 is outside the certified regime; pass "
        "relaxed for an observational check");
  const long p = BallReal::clamp_prec(cfg.prec);
  BallComplex s(BallReal::from_double(alpha, p), BallReal::from_double(t, p));
  BallComplex ld = log_deriv(s, cfg);
  BallReal half_log_t = div_ui(log_ball(BallReal::from_double(t, p), p), 2, p);
  BallReal sum = partial_zero_sum(table, alpha, t, T, p);
  BallReal margin = sub(add(ld.re, half_log_t, p), sum, p);
  if (margin.sign() == Sign::undecided)
    throw UndecidedError(
        "lemma21_check: margin straddles zero; increase prec");
  return margin;
}

}  // namespace zetaline
