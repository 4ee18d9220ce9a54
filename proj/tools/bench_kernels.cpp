// Compares the OpenMP kernels against their serial reference
// implementations: the phase-table moment sums behind the Taylor models and
// the zero-ordinate partial sum. Inputs are synthetic but sized and shaped
// like production data.
#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "zetaline/segment.hpp"
#include "zetaline/zeros.hpp"

namespace {

using namespace zetaline;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<double> synthetic_phases(long count) {
  std::vector<double> cs(2 * static_cast<std::size_t>(count), 0.0);
  cs[2] = 1.0;  // n = 1
  double theta = 0.0;
  for (long n = 2; n < count; ++n) {
    theta += 2.399963229728653 + 1e-7 * double(n % 9973);
    if (theta > 6.283185307179586) theta -= 6.283185307179586;
    cs[2 * n] = std::cos(theta);
    cs[2 * n + 1] = std::sin(theta);
  }
  return cs;
}

// Ordinates on the smooth zero-counting curve g/2pi log(g/2pi e) + 7/8 = k,
// Newton per index, warm-started from the previous root.
ZeroTable synthetic_zeros(long count) {
  const double two_pi = 6.283185307179586;
  std::vector<BallReal> ords;
  ords.reserve(count);
  double g = 17.0;
  for (long k = 1; k <= count; ++k) {
    g += two_pi / std::log(g);
    for (int it = 0; it < 40; ++it) {
      double f = g / two_pi * std::log(g / (two_pi * 2.718281828459045)) +
                 7.0 / 8.0 - double(k);
      double fp = std::log(g / two_pi) / two_pi;
      double step = f / fp;
      g -= step;
      if (std::abs(step) < 1e-12 * g) break;
    }
    ords.push_back(widen(BallReal::from_double(g), 1e-9));
  }
  double top = ords.back().mid_d();
  return ZeroTable(std::move(ords), "synthetic smooth-count table", top, 1e-9);
}

template <typename F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel comparison"};
  long size = 4'000'000;
  long zeros = 200'000;
  int jmax = 26;
  int reps = 3;
  app.add_option("--size", size, "phase table length");
  app.add_option("--zeros", zeros, "synthetic ordinate count");
  app.add_option("--jmax", jmax, "moment orders to accumulate");
  app.add_option("--reps", reps, "repetitions, best time kept");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; both columns run serial code\n");
#endif

  {
    std::vector<double> cs = synthetic_phases(size);
    MomentSums serial, parallel;
    double t_serial = best_of(reps, [&] {
      serial = moment_kernel_serial(cs, size, jmax, 1e-15);
    });
    double t_parallel = best_of(reps, [&] {
      parallel = moment_kernel(cs, size, jmax, 1e-15);
    });
    double dev = 0.0;
    bool consistent = true;
    for (int j = 0; j <= jmax; ++j) {
      double dre = std::abs(serial.re[j] - parallel.re[j]);
      double dim = std::abs(serial.im[j] - parallel.im[j]);
      dev = std::max(dev, std::max(dre, dim));
      if (dre > serial.rad[j] + parallel.rad[j] ||
          dim > serial.rad[j] + parallel.rad[j])
        consistent = false;
    }
    std::printf("moment_kernel      n=%-9ld jmax=%-3d serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n",
                size, jmax, t_serial, t_parallel, t_serial / t_parallel);
    std::printf("  enclosures %s, max mid deviation %.3e\n",
                consistent ? "consistent" : "INCONSISTENT", dev);
    if (!consistent) return 1;
  }

  {
    ZeroTable table = synthetic_zeros(zeros);
    double t = 0.37 * table.gamma_max();
    double T = table.claimed_complete_to();
    BallReal serial, parallel;
    double t_serial = best_of(reps, [&] {
      serial = partial_zero_sum_serial(table, 1.25, t, T, 128);
    });
    double t_parallel = best_of(reps, [&] {
      parallel = partial_zero_sum(table, 1.25, t, T, 128);
    });
    bool consistent = serial.intersects(parallel);
    std::printf("partial_zero_sum   n=%-9ld          serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n",
                zeros, t_serial, t_parallel, t_serial / t_parallel);
    std::printf("  enclosures %s: serial %s, parallel %s\n",
                consistent ? "consistent" : "INCONSISTENT",
                serial.to_decimal(17).c_str(), parallel.to_decimal(17).c_str());
    if (!consistent) return 1;
  }
  return 0;
}
