#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <vector>

#include "cvq/qdilog.hpp"

// Timing comparison of the parallel batch dilogarithm kernel against its
// serial reference, plus the agreement check between the two.

using clock_type = std::chrono::steady_clock;

static double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int main(int argc, char** argv) {
  CLI::App app{"batch dilogarithm kernel benchmark"};
  int points = 2000, repeat = 3;
  double hbar = cvq::DilogConfig{}.hbar;
  app.add_option("--points", points, "number of evaluation points");
  app.add_option("--repeat", repeat, "timing repetitions, best taken");
  app.add_option("--hbar", hbar, "deformation parameter");
  CLI11_PARSE(app, argc, argv);

  cvq::DilogConfig cfg;
  cfg.hbar = hbar;
  double half = cvq::strip_halfwidth(hbar);
  std::vector<std::complex<double>> zs;
  zs.reserve(static_cast<size_t>(points));
  for (int i = 0; i < points; ++i) {
    double t = static_cast<double>(i) / points;
    zs.emplace_back(-3.0 + 6.0 * t, 0.8 * half * std::sin(12.7 * t));
  }

  double t_serial = 1e300, t_parallel = 1e300;
  std::vector<std::complex<double>> serial, parallel;
  for (int r = 0; r < repeat; ++r) {
    auto t0 = clock_type::now();
    serial = cvq::phi_eval_batch_serial(cfg, zs);
    t_serial = std::min(t_serial, seconds_since(t0));
    t0 = clock_type::now();
    parallel = cvq::phi_eval_batch(cfg, zs);
    t_parallel = std::min(t_parallel, seconds_since(t0));
  }

  double max_diff = 0;
  for (size_t i = 0; i < serial.size(); ++i)
    max_diff = std::max(max_diff, std::abs(serial[i] - parallel[i]));

  std::printf("points          %d\n", points);
  std::printf("serial          %.4f s  (%.1f us/point)\n", t_serial, 1e6 * t_serial / points);
  std::printf("parallel        %.4f s  (%.1f us/point)\n", t_parallel,
              1e6 * t_parallel / points);
  std::printf("speedup         %.2fx\n", t_serial / t_parallel);
  std::printf("max |diff|      %.3g\n", max_diff);
  return max_diff < 1e-12 ? 0 : 1;
}
