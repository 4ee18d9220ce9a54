#include "zetaline/scan.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>

#include "zetaline/segment.hpp"
#include "zetaline/zeros.hpp"

namespace zetaline {

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::logderiv: return "logderiv";
    case Quantity::inv_zeta: return "inv_zeta";
    case Quantity::zeta: return "zeta";
    case Quantity::log_zeta: return "log_zeta";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_ok: return "certified_ok";
    case Verdict::certified_violation: return "certified_violation";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

Quantity quantity_from_string(const std::string& name) {
  if (name == "logderiv") return Quantity::logderiv;
  if (name == "inv_zeta") return Quantity::inv_zeta;
  if (name == "zeta") return Quantity::zeta;
  if (name == "log_zeta") return Quantity::log_zeta;
  throw ParseError("unknown quantity: " + name);
}

Verdict verdict_from_string(const std::string& name) {
  if (name == "certified_ok") return Verdict::certified_ok;
  if (name == "certified_violation") return Verdict::certified_violation;
  if (name == "undecided") return Verdict::undecided;
  throw ParseError("unknown verdict: " + name);
}

namespace {

constexpr Quantity kAllQuantities[] = {Quantity::logderiv, Quantity::inv_zeta,
                                       Quantity::zeta, Quantity::log_zeta};

void validate(const ScanConfig& cfg) {
  if (cfg.steps < 1) throw ConfigError("run_scan: steps must be >= 1");
  if (!(cfg.t_min > 0) || !(cfg.t_max >= cfg.t_min))
    throw ConfigError("run_scan: requires 0 < t_min <= t_max");
  if (cfg.steps == 1 && cfg.t_min != cfg.t_max)
    throw ConfigError("run_scan: steps = 1 requires t_min == t_max");
  if (!cfg.relaxed && cfg.t_min < 1e6)
    throw ConfigError(
        "run_scan: t_min below 1e6; pass relaxed for an observational scan");
  if (cfg.t_max > (1.0 - cfg.delta) * cfg.T)
    throw ConfigError("run_scan: requires t_max <= (1-delta)*T");
  if (cfg.zeros_path.empty())
    throw ConfigError("run_scan: zeros_path is required");
}

// |zeta'/zeta|, |1/zeta|, |zeta|, or |log zeta| at 1+it from the shared
// evaluator; log zeta is built once on demand.
BallReal computed_value(Quantity q, const SegmentEvaluator& ev,
                        std::optional<BallComplex>& log_zeta_cache, long p) {
  switch (q) {
    case Quantity::logderiv: {
      BallComplex z = ev.zeta(1.0);
      if (cabs2(z, p).sign() != Sign::positive)
        throw UndecidedError("zeta enclosure touches zero; raise prec");
      return cabs(cdiv(ev.zeta_prime(1.0), z, p), p);
    }
    case Quantity::inv_zeta: {
      BallReal az = cabs(ev.zeta(1.0), p);
      if (az.sign() != Sign::positive)
        throw UndecidedError("zeta enclosure touches zero; raise prec");
      return ui_div(1, az, p);
    }
    case Quantity::zeta:
      return cabs(ev.zeta(1.0), p);
    case Quantity::log_zeta: {
      if (!log_zeta_cache) log_zeta_cache = ev.log_zeta_at_1();
      return cabs(*log_zeta_cache, p);
    }
  }
  throw ArgumentError("unreachable quantity");
}

BallReal bound_value(Quantity q, const TheoremBounds& tb) {
  switch (q) {
    case Quantity::logderiv: return tb.logderiv;
    case Quantity::inv_zeta: return tb.inv_zeta;
    case Quantity::zeta: return tb.zeta;
    case Quantity::log_zeta: return tb.log_zeta;
  }
  throw ArgumentError("unreachable quantity");
}

}  // namespace

std::vector<double> scan_grid(const ScanConfig& cfg) {
  validate(cfg);
  std::vector<double> grid(static_cast<std::size_t>(cfg.steps));
  grid.front() = cfg.t_min;
  grid.back() = cfg.t_max;
  const long n1 = cfg.steps - 1;
  if (cfg.spacing == Spacing::linear) {
    for (long i = 1; i < n1; ++i)
      grid[static_cast<std::size_t>(i)] =
          (cfg.t_min * static_cast<double>(n1 - i) +
           cfg.t_max * static_cast<double>(i)) /
          static_cast<double>(n1);
  } else {
    const double la = std::log(cfg.t_min);
    const double lb = std::log(cfg.t_max);
    for (long i = 1; i < n1; ++i)
      grid[static_cast<std::size_t>(i)] =
          std::exp((la * static_cast<double>(n1 - i) +
                    lb * static_cast<double>(i)) /
                   static_cast<double>(n1));
  }
  return grid;
}

std::vector<VerificationRecord> run_scan(const ScanConfig& cfg) {
  const std::vector<double> grid = scan_grid(cfg);
  const long p = BallReal::clamp_prec(cfg.prec);
  const BoundParams params(cfg.T, cfg.delta, p);
  const ZeroTable table = load_zeros(cfg.zeros_path, ZeroFormat::commented);
  (void)table;

  std::vector<Quantity> qs(cfg.quantities);
  if (qs.empty()) qs.assign(std::begin(kAllQuantities), std::end(kAllQuantities));

  const std::size_t nq = qs.size();
  std::vector<VerificationRecord> records(grid.size() * nq);

#pragma omp parallel for schedule(dynamic)
  for (long gi = 0; gi < static_cast<long>(grid.size()); ++gi) {
    const double t = grid[static_cast<std::size_t>(gi)];

    std::optional<TheoremBounds> tb;
    std::string bound_err;
    try {
      tb = theorem_bounds(t, params, p);
    } catch (const Error& e) {
      bound_err = e.what();
    }

    std::optional<SegmentEvaluator> ev;
    std::string eval_err;
    try {
      EvalConfig ecfg;
      ecfg.prec = p;
      ev.emplace(BallReal::from_double(t, p), ecfg);
    } catch (const Error& e) {
      eval_err = e.what();
    }

    std::optional<BallComplex> log_zeta_cache;
    for (std::size_t qi = 0; qi < nq; ++qi) {
      VerificationRecord& rec = records[static_cast<std::size_t>(gi) * nq + qi];
      rec.t = t;
      rec.quantity = qs[qi];
      if (tb) rec.bound = bound_value(qs[qi], *tb);

      if (ev) {
        try {
          rec.computed = computed_value(qs[qi], *ev, log_zeta_cache, p);
        } catch (const Error& e) {
          rec.reason = e.what();
          continue;
        }
      } else {
        rec.reason = eval_err;
        continue;
      }
      if (!tb) {
        rec.reason = bound_err;
        continue;
      }

      rec.margin = sub(rec.bound, rec.computed, p);
      switch (rec.margin.sign()) {
        case Sign::positive:
          rec.verdict = Verdict::certified_ok;
          break;
        case Sign::negative:
          rec.verdict = Verdict::certified_violation;
          break;
        case Sign::undecided:
          rec.reason = "margin ball straddles zero; raise prec";
          break;
      }
    }
  }
  return records;
}

}  // namespace zetaline
