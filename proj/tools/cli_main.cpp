// Command-line front end: constants, bounds, verify, audit, zeros, primes,
// explicit-formula. Exit codes: 0 everything certified, 2 something
// undecided, 3 a certified violation or audit failure, 64 usage, 1 I/O
// and other operational failures.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "zetaline/ball.hpp"
#include "zetaline/bounds.hpp"
#include "zetaline/explicit_formula.hpp"
#include "zetaline/fetch.hpp"
#include "zetaline/primes.hpp"
#include "zetaline/report.hpp"
#include "zetaline/scan.hpp"
#include "zetaline/zeros.hpp"

namespace {

using namespace zetaline;

constexpr int kOk = 0;
constexpr int kOperational = 1;
constexpr int kUndecided = 2;
constexpr int kViolation = 3;
constexpr int kUsage = 64;

// JSON config: top-level objects are subcommand sections keyed by flag name
// (underscores accepted as dashes), scalars apply to the app itself.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json j;
    try {
      input >> j;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    std::vector<CLI::ConfigItem> items;
    walk(j, "", {}, items);
    return items;
  }

 private:
  static std::string key_name(std::string k) {
    for (char& c : k)
      if (c == '_') c = '-';
    return k;
  }

  static std::string scalar(const nlohmann::json& j) {
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_number()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      return buf;
    }
    if (j.is_string()) return j.get<std::string>();
    throw CLI::ConfigError("config values must be scalars or one level of sections");
  }

  static void walk(const nlohmann::json& j, const std::string& name,
                   std::vector<std::string> parents,
                   std::vector<CLI::ConfigItem>& out) {
    if (j.is_object()) {
      if (!name.empty()) parents.push_back(name);
      for (const auto& item : j.items())
        walk(item.value(), key_name(item.key()), parents, out);
      return;
    }
    if (name.empty())
      throw CLI::ConfigError("config root must be a JSON object");
    CLI::ConfigItem ci;
    ci.parents = std::move(parents);
    ci.name = name;
    if (j.is_array()) {
      for (const auto& v : j) ci.inputs.push_back(scalar(v));
    } else if (!j.is_null()) {
      ci.inputs.push_back(scalar(j));
    }
    out.push_back(std::move(ci));
  }
};

std::string show(const BallReal& b, int digits = 0) {
  char r[32];
  std::snprintf(r, sizeof r, "%.1e", b.rad());
  std::string mid = digits > 0 ? b.to_decimal(digits) : b.to_decimal();
  return mid + "  +/- " + r;
}

std::string show_c(const BallComplex& z, int digits = 17) {
  return show(z.re, digits) + "   " + show(z.im, digits);
}

int run_constants(long prec) {
  Constants c = solve_lambda0(prec);
  std::printf("%-12s %s\n", "lambda0", show(c.lambda0).c_str());
  std::printf("%-12s %s\n", "a0", show(c.a0).c_str());
  std::printf("%-12s %s\n", "euler_gamma", show(c.euler_gamma).c_str());
  std::printf("%-12s %s\n", "log_zeta_32", show(c.log_zeta_32).c_str());
  return kOk;
}

int run_bounds(double t, double T, double delta, const std::string& which,
               bool compare, long prec) {
  BoundParams params(T, delta, prec);
  TheoremBounds tb = theorem_bounds(t, params, prec);
  std::printf("t = %.6e   T = %.6e   delta = %.6e\n", t, T, delta);
  auto row = [](const char* name, const BallReal& v) {
    std::printf("%-10s %s\n", name, show(v, 21).c_str());
  };
  bool all = which == "all";
  if (all || which == "logderiv") row("logderiv", tb.logderiv);
  if (all || which == "logzeta") row("logzeta", tb.log_zeta);
  if (all || which == "invzeta") row("invzeta", tb.inv_zeta);
  if (all || which == "zeta") row("zeta", tb.zeta);
  if (compare) {
    std::printf("\nliterature bounds at t = %.6e:\n", t);
    std::printf("  %-26s %-16s %-24s %s\n", "name", "value", "window", "status");
    for (const ComparisonBound& cb : comparison_bounds(t, prec)) {
      char window[64];
      if (std::isfinite(cb.t_max))
        std::snprintf(window, sizeof window, "[%.3e, %.3e]", cb.t_min, cb.t_max);
      else
        std::snprintf(window, sizeof window, "[%.3e, inf)", cb.t_min);
      std::printf("  %-26s %-16.6e %-24s %s\n", cb.name.c_str(), cb.value.mid_d(),
                  window, cb.in_window ? "in window" : "outside window");
    }
  }
  return kOk;
}

int run_verify(const ScanConfig& cfg, const std::string& out,
               const std::string& format) {
  std::vector<VerificationRecord> records = run_scan(cfg);
  ReportFormat fmt = report_format_from_string(format);
  if (out.empty())
    emit_report(records, fmt, std::cout);
  else
    emit_report(records, fmt, out);

  long ok = 0, bad = 0, undecided = 0;
  for (const auto& r : records) {
    if (r.verdict == Verdict::certified_ok) ++ok;
    else if (r.verdict == Verdict::certified_violation) ++bad;
    else ++undecided;
  }
  std::fprintf(stderr, "scan: %zu records, %ld certified_ok, %ld certified_violation, %ld undecided\n",
               records.size(), ok, bad, undecided);
  int shown = 0;
  for (const auto& r : records) {
    if (r.verdict != Verdict::undecided) continue;
    if (++shown > 10) {
      std::fprintf(stderr, "  ... %ld more undecided\n", undecided - 10);
      break;
    }
    std::fprintf(stderr, "  undecided t=%.6e %s: %s\n", r.t,
                 to_string(r.quantity), r.reason.c_str());
  }
  if (bad > 0) return kViolation;
  if (undecided > 0) return kUndecided;
  return kOk;
}

int run_audit(double T, double delta, long grid_n, long prec) {
  BoundParams params(T, delta, prec);
  Constants consts = solve_lambda0(prec);
  std::vector<double> grid;
  if (grid_n > 0) {
    double lo = std::log(1e6), hi = std::log(1e12);
    for (long i = 0; i < grid_n; ++i) {
      if (i == 0)
        grid.push_back(1e6);
      else if (i == grid_n - 1)
        grid.push_back(1e12);
      else
        grid.push_back(std::exp(lo + (hi - lo) * double(i) / double(grid_n - 1)));
    }
  }
  AuditReport rep = audit_constants(params, consts, grid, prec);
  for (const std::string& line : rep.checks) std::printf("ok   %s\n", line.c_str());
  for (const std::string& line : rep.failures) std::printf("FAIL %s\n", line.c_str());
  if (rep.passed) {
    std::printf("audit: PASS (%zu checks)\n", rep.checks.size());
    return kOk;
  }
  std::printf("audit: FAIL (%zu failures)\n", rep.failures.size());
  return kViolation;
}

int run_zeros_stats(const std::string& file) {
  ZeroTable table = load_zeros(file, ZeroFormat::commented);
  std::printf("%-12s %s\n", "file", file.c_str());
  std::printf("%-12s %s\n", "source", table.source().c_str());
  std::printf("%-12s %zu\n", "count", table.size());
  std::printf("%-12s %.10e\n", "gamma_max", table.gamma_max());
  std::printf("%-12s %.10e\n", "complete_to", table.claimed_complete_to());
  std::printf("%-12s %.3e\n", "accuracy", table.accuracy());

  const double two_pi = 6.283185307179586;
  const double e = 2.718281828459045;
  double top = table.claimed_complete_to();
  std::printf("density residuals (count below H minus smooth count):\n");
  std::printf("  %-14s %-10s %-14s %s\n", "H", "count", "smooth", "residual");
  double worst = 0.0;
  const int pts = 8;
  for (int i = 0; i <= pts; ++i) {
    double h = top <= 20.0 ? top : 20.0 * std::pow(top / 20.0, double(i) / pts);
    double cnt = static_cast<double>(table.count_below(h));
    double smooth = h / two_pi * std::log(h / (two_pi * e)) + 7.0 / 8.0;
    double res = cnt - smooth;
    worst = std::max(worst, std::abs(res));
    std::printf("  %-14.6e %-10ld %-14.4f %+.4f\n", h, (long)cnt, smooth, res);
    if (top <= 20.0) break;
  }
  std::printf("max |residual| %.4f, allowance at top %.4f\n", worst,
              0.15 * std::log(top) + 3.0);
  return kOk;
}

int run_zeros_fetch(const std::string& url, const std::string& out,
                    const std::string& sha) {
  std::string path = fetch_zeros(url, out, sha);
  ZeroTable table = load_zeros(path, ZeroFormat::commented);
  std::printf("wrote %s: %zu ordinates up to %.10e\n", path.c_str(),
              table.size(), table.gamma_max());
  return kOk;
}

int run_primes_check(double x, const std::string& which, long prec) {
  long limit = static_cast<long>(std::ceil(x)) + 1;
  if (limit < 2) limit = 2;
  PrimeTable table = sieve_mangoldt(limit);
  RefIneq ineq = which == "ramare" ? RefIneq::ramare : RefIneq::rosser;
  BallReal margin = reference_inequality_check(table, x, ineq, prec);
  bool positive = margin.is_positive();
  std::printf("x = %.6e   which = %s\n", x, which.c_str());
  std::printf("margin = %s  (%s)\n", show(margin, 21).c_str(),
              positive ? "certified positive" : "certified NEGATIVE");
  return positive ? kOk : kViolation;
}

int run_explicit_formula(double t, double alpha, double x, double y,
                         const std::string& zeros, long prec) {
  Constants consts = solve_lambda0(prec);
  FormulaParams params = x > 0 && y > 0
                             ? FormulaParams(x, y,
                                             BallComplex(BallReal::from_double(alpha, prec),
                                                         BallReal::from_double(t, prec)))
                             : FormulaParams::instantiate(alpha, t, consts, prec);
  ZeroTable table = load_zeros(zeros, ZeroFormat::commented);
  double xy = params.x * params.y;
  PrimeTable primes = sieve_mangoldt(static_cast<long>(std::ceil(xy)) + 1);
  EvalConfig cfg;
  cfg.prec = prec;
  FormulaSides sides = formula_sides(params, table, primes, cfg);

  std::printf("alpha = %.6f   t = %.6e   x = %.6e   y = %.6e\n", alpha, t,
              params.x, params.y);
  std::printf("%-9s %-45s %s\n", "term", "re", "im");
  auto row = [](const char* name, const BallComplex& z) {
    std::printf("%-9s %s\n", name, show_c(z).c_str());
  };
  row("lhs", sides.lhs);
  row("zero", sides.zero_term);
  row("trivial", sides.trivial_term);
  row("pole", sides.pole_term);
  row("prime", sides.prime_term);

  long p = prec < 8 ? 8 : prec;
  BallComplex rhs = csub(cadd(cneg(sides.zero_term), sides.pole_term, p),
                         cadd(sides.trivial_term, sides.prime_term, p), p);
  BallReal residual = cabs(csub(sides.lhs, rhs, p), p);
  BallReal margin = sub(sides.zero_tail_budget, residual, p);
  std::printf("%-9s %s\n", "residual", show(residual, 17).c_str());
  std::printf("%-9s %s\n", "budget", show(sides.zero_tail_budget, 17).c_str());
  std::printf("%-9s %s", "margin", show(margin, 17).c_str());
  switch (margin.sign()) {
    case Sign::positive:
      std::printf("  (certified nonnegative)\n");
      return kOk;
    case Sign::negative:
      std::printf("  (certified NEGATIVE)\n");
      return kViolation;
    default:
      std::printf("  (undecided)\n");
      return kUndecided;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigorous bounds for zeta on the 1-line under a partial RH hypothesis"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON config file; command-line flags take precedence");

  auto* c_cmd = app.add_subcommand("constants", "print the packaged constants with radii");
  long c_prec = kDefaultPrec;
  c_cmd->add_option("--prec", c_prec, "working precision in bits");

  auto* b_cmd = app.add_subcommand("bounds", "evaluate the packaged bounds at a height");
  double b_t = 0, b_T = 0, b_delta = 0;
  std::string b_which = "all";
  bool b_compare = false;
  long b_prec = kDefaultPrec;
  b_cmd->add_option("--t", b_t, "height t")->required();
  b_cmd->add_option("--T", b_T, "verified-zeros height T")->required();
  b_cmd->add_option("--delta", b_delta, "slack delta in (0,1)")->required();
  b_cmd->add_option("--which", b_which, "quantity selector")
      ->check(CLI::IsMember({"logderiv", "invzeta", "zeta", "logzeta", "all"}));
  b_cmd->add_flag("--compare", b_compare, "append literature bounds with validity windows");
  b_cmd->add_option("--prec", b_prec, "working precision in bits");

  auto* v_cmd = app.add_subcommand("verify", "scan a t-range and compare enclosures against the bounds");
  ScanConfig scfg;
  bool v_log = false;
  std::string v_out, v_format = "csv";
  std::vector<std::string> v_quant;
  v_cmd->add_option("--t-min", scfg.t_min, "grid start")->required();
  v_cmd->add_option("--t-max", scfg.t_max, "grid end")->required();
  v_cmd->add_option("--steps", scfg.steps, "grid size")->required();
  v_cmd->add_flag("--log", v_log, "log spacing (default linear)");
  v_cmd->add_option("--T", scfg.T, "verified-zeros height T")->required();
  v_cmd->add_option("--delta", scfg.delta, "slack delta in (0,1)")->required();
  v_cmd->add_option("--zeros", scfg.zeros_path, "zero ordinate file")->required();
  v_cmd->add_option("--prec", scfg.prec, "working precision in bits");
  v_cmd->add_flag("--relaxed", scfg.relaxed, "allow t below 1e6 (observational)");
  v_cmd->add_option("--quantity", v_quant, "subset of quantities to scan")
      ->check(CLI::IsMember({"logderiv", "inv_zeta", "zeta", "log_zeta"}));
  v_cmd->add_option("--out", v_out, "report file (default stdout)");
  v_cmd->add_option("--format", v_format, "report format")
      ->check(CLI::IsMember({"csv", "json", "plot"}));

  auto* a_cmd = app.add_subcommand("audit", "re-derive and certify the packaged constants");
  double a_T = 0, a_delta = 0;
  long a_grid = 0, a_prec = kDefaultPrec;
  a_cmd->add_option("--T", a_T, "verified-zeros height T")->required();
  a_cmd->add_option("--delta", a_delta, "slack delta in (0,1)")->required();
  a_cmd->add_option("--grid", a_grid, "audit grid size (default 200)");
  a_cmd->add_option("--prec", a_prec, "working precision in bits");

  auto* z_cmd = app.add_subcommand("zeros", "zero-table utilities");
  z_cmd->require_subcommand(1);
  auto* zs_cmd = z_cmd->add_subcommand("stats", "table summary and density residuals");
  std::string zs_file;
  zs_cmd->add_option("--file", zs_file, "zero ordinate file")->required();
  auto* zf_cmd = z_cmd->add_subcommand("fetch", "download and normalize a zero table");
  std::string zf_url, zf_out, zf_sha;
  zf_cmd->add_option("--url", zf_url, "http(s) source")->required();
  zf_cmd->add_option("--out", zf_out, "destination file")->required();
  zf_cmd->add_option("--sha256", zf_sha, "expected payload checksum, hex");

  auto* p_cmd = app.add_subcommand("primes", "prime-sum utilities");
  p_cmd->require_subcommand(1);
  auto* pc_cmd = p_cmd->add_subcommand("check", "certify a reference prime-sum inequality");
  double pc_x = 0;
  std::string pc_which;
  long pc_prec = kDefaultPrec;
  pc_cmd->add_option("--x", pc_x, "sum cutoff")->required();
  pc_cmd->add_option("--which", pc_which, "inequality")
      ->required()
      ->check(CLI::IsMember({"ramare", "rosser"}));
  pc_cmd->add_option("--prec", pc_prec, "working precision in bits");

  auto* f_cmd = app.add_subcommand("explicit-formula", "evaluate the weighted identity term by term");
  double f_t = 0, f_alpha = 0, f_x = 0, f_y = 0;
  std::string f_zeros;
  long f_prec = kDefaultPrec;
  f_cmd->add_option("--t", f_t, "height t")->required();
  f_cmd->add_option("--alpha", f_alpha, "real part of s, in [1, 3/2]")->required();
  auto* fx = f_cmd->add_option("--x", f_x, "plateau end (default from alpha, t)");
  auto* fy = f_cmd->add_option("--y", f_y, "decay span (default from alpha, t)");
  fx->needs(fy);
  fy->needs(fx);
  f_cmd->add_option("--zeros", f_zeros, "zero ordinate file")->required();
  f_cmd->add_option("--prec", f_prec, "working precision in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_cmd) return run_constants(c_prec);
    if (*b_cmd) return run_bounds(b_t, b_T, b_delta, b_which, b_compare, b_prec);
    if (*v_cmd) {
      if (v_log) scfg.spacing = Spacing::log;
      for (const std::string& q : v_quant)
        scfg.quantities.push_back(quantity_from_string(q));
      return run_verify(scfg, v_out, v_format);
    }
    if (*a_cmd) return run_audit(a_T, a_delta, a_grid, a_prec);
    if (*zs_cmd) return run_zeros_stats(zs_file);
    if (*zf_cmd) return run_zeros_fetch(zf_url, zf_out, zf_sha);
    if (*pc_cmd) return run_primes_check(pc_x, pc_which, pc_prec);
    if (*f_cmd) return run_explicit_formula(f_t, f_alpha, f_x, f_y, f_zeros, f_prec);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const ArgumentError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const ProximityError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const CoverageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const UndecidedError& e) {
    std::fprintf(stderr, "undecided: %s\n", e.what());
    return kUndecided;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kOperational;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kOperational;
  }
  return kUsage;
}
