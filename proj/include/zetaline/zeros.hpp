#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zetaline/ball.hpp"
#include "zetaline/zeta.hpp"

namespace zetaline {

enum class ZeroFormat { plain, commented };

// Positive zero ordinates, strictly increasing; the negative ordinates are
// implied by symmetry and never stored.  Construction validates ordering,
// the >14 floor, claimed completeness, and a zero-count density envelope
// that catches corrupted or truncated-in-the-middle tables.
class ZeroTable {
 public:
  ZeroTable(std::vector<BallReal> ordinates, std::string source,
            double claimed_complete_to, double accuracy);

  const std::vector<BallReal>& ordinates() const { return ords_; }
  std::size_t size() const { return ords_.size(); }
  double gamma_max() const { return ords_.back().upper_d(); }
  double claimed_complete_to() const { return complete_to_; }
  double accuracy() const { return accuracy_; }
  const std::string& source() const { return source_; }
  // number of ordinates with midpoint <= h
  std::size_t count_below(double h) const;

 private:
  std::vector<BallReal> ords_;
  std::string source_;
  double complete_to_;
  double accuracy_;
};

// plain: one decimal ordinate per line.  commented: additionally allows
// '#'-prefixed lines; `# source: <text>`, `# complete_to: <real>` and
// `# accuracy: <real>` headers are honored, other comments are skipped.
// Ordinates are parsed at 96 bits and widened by the accuracy radius
// (default 1e-9).
ZeroTable load_zeros(const std::string& path, ZeroFormat format);

// sum over both signs of gamma of (alpha-1/2)/((alpha-1/2)^2 + (t-gamma)^2)
// for |gamma| <= T; boundary membership follows the stored midpoints.
BallReal partial_zero_sum(const ZeroTable& table, double alpha, double t,
                          double T, long prec = kDefaultPrec);
BallReal partial_zero_sum_serial(const ZeroTable& table, double alpha,
                                 double t, double T,
                                 long prec = kDefaultPrec);

// certified upper bound for sum_{gamma > T} 1/gamma^2:
//   (log(T/2pi)+1)/(2pi T) + (0.14 + 0.56 log T)/T^2
// Gated to T >= 1e9 unless below_gate_ok is set.
BallReal tail_square_bound(double T, bool below_gate_ok = false,
                           long prec = kDefaultPrec);

// Enclosure pieces for E(t,T) = sum_{|gamma|>T} 1/(gamma-t)^2:
// first = data sum over T < gamma <= gamma_max (both signs), a valid lower
// part; second = first + (1/delta_eff^2 + 1) * tail envelope above the
// table, delta_eff = 1 - t/gamma_max.
std::pair<BallReal, BallReal> e_enclosure(const ZeroTable& table, double t,
                                          double T,
                                          long prec = kDefaultPrec);

// margin = Re zeta'/zeta(alpha+it) + (log t)/2 - partial_zero_sum(alpha,t,T).
// Certified only for t >= 1e6; smaller t requires relaxed=true and the
// result is observational.
BallReal lemma21_check(const ZeroTable& table, double alpha, double t,
                       double T, const EvalConfig& cfg, bool relaxed = false);

}  // namespace zetaline
