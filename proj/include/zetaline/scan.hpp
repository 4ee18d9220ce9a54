#pragma once

#include <string>
#include <vector>

#include "zetaline/ball.hpp"
#include "zetaline/bounds.hpp"

namespace zetaline {

enum class Spacing { linear, log };
enum class Quantity { logderiv, inv_zeta, zeta, log_zeta };
enum class Verdict { certified_ok, certified_violation, undecided };

const char* to_string(Quantity q);
const char* to_string(Verdict v);
Quantity quantity_from_string(const std::string& name);
Verdict verdict_from_string(const std::string& name);

struct ScanConfig {
  double t_min = 1e6;
  double t_max = 1e6;
  long steps = 1;
  Spacing spacing = Spacing::linear;
  double T = 0;
  double delta = 0;
  long prec = kDefaultPrec;
  std::string zeros_path;
  std::vector<Quantity> quantities;  // empty selects all four
  bool relaxed = false;              // allow t below 1e6, observational
};

// One certified comparison: computed = |enclosure| at 1+it, bound the
// packaged theorem value, margin = bound - computed. The verdict is the
// margin ball's certified sign; any failure along the way downgrades the
// record to undecided and names the cause in reason, keeping whichever
// side was already computed.
struct VerificationRecord {
  double t = 0;
  Quantity quantity = Quantity::logderiv;
  BallReal computed;
  BallReal bound;
  BallReal margin;
  Verdict verdict = Verdict::undecided;
  std::string reason;
};

// The evaluation grid: steps points over [t_min, t_max] with the requested
// spacing. Interpolation weights i/(steps-1) are exact rationals, endpoints
// are pinned, so the grid is reproducible bit for bit.
std::vector<double> scan_grid(const ScanConfig& cfg);

// Runs the whole grid; points are independent and processed by an OpenMP
// pool, records land in grid order (quantities cycle fastest). The zero
// table at zeros_path is loaded and validated as the provenance for the
// partial-RH hypothesis; the bounds themselves take T and delta from cfg.
// Configuration problems throw; per-point problems never abort the scan.
std::vector<VerificationRecord> run_scan(const ScanConfig& cfg);

}  // namespace zetaline
