#pragma once

#include <complex>
#include <string>
#include <vector>

namespace cvq {

/// Parameters for the contour-integral evaluation of the non-compact quantum
/// dilogarithm and for the compact infinite product.
struct DilogConfig {
  double hbar = 0.41421356237309503;  // sqrt(2) - 1
  double circle_radius = 1e-2;        // detour half-circle at the origin
  double tail_threshold = 1e-18;      // integrand / product tail cutoff
  int max_psi_terms = 2000;
  double pole_guard = 1e-6;           // refuse continuation this close to a pole
  double tol = 1e-8;
};

/// Half-width of the strip |Im z| < pi (1 + Re h) where the defining integral
/// converges.
double strip_halfwidth(std::complex<double> h);
bool in_strip(const DilogConfig& cfg, std::complex<double> z);

/// The constant in the inversion relation phi(z) phi(-z) = c exp(z^2 / (4 pi i h)).
std::complex<double> inversion_constant(std::complex<double> h);

/// Contour-integral value
///
///   phi(z) = exp( -1/4 Int e^{-ipz} / (p sinh(pi p) sinh(pi h p)) dp )
///
/// over the real line with a half-circle detour of radius circle_radius above
/// the origin. Requires Re h > 0 and z inside the convergence strip.
std::complex<double> phi_eval(const DilogConfig& cfg, std::complex<double> z);

/// Same integral at a general complex parameter h with Re h > 0.
std::complex<double> phi_eval_at(const DilogConfig& cfg, std::complex<double> h,
                                 std::complex<double> z);

/// The same integral with the detour passing below the origin. The detour
/// side changes the value by the full residue at the origin, which works out
/// to the inversion factor: below(z) = 1 / above(-z).
std::complex<double> phi_eval_below(const DilogConfig& cfg, std::complex<double> z);

/// Meromorphic continuation to the whole plane by the step relation
/// phi(z + 2 pi i h) = (1 + q e^z) phi(z). Throws within pole_guard of a pole
/// of the continued function.
std::complex<double> phi_continue(const DilogConfig& cfg, std::complex<double> z);

/// Compact quantum dilogarithm prod_{i>=1} (1 + q^{2i-1} z)^{-1} for |q| < 1,
/// truncated once the tail factors are below tail_threshold. Throws within
/// pole_guard of a pole.
std::complex<double> psi_eval(const DilogConfig& cfg, std::complex<double> q,
                              std::complex<double> z);

/// Residuals of the defining identities, |difference| of the two sides.
double check_unitarity(const DilogConfig& cfg, double x);
double check_inversion(const DilogConfig& cfg, std::complex<double> z);
double check_duality(const DilogConfig& cfg, std::complex<double> z);
double check_step_relation(const DilogConfig& cfg, std::complex<double> z);
/// phi(z + 2 pi i h M) / phi(z) against the length-|M| binomial product in e^z.
double check_shift_product(const DilogConfig& cfg, int M, std::complex<double> z);
/// phi(z + 2 pi i M) / phi(z) against the binomial product in e^{z/h} with the
/// dual base e^{pi i / h}.
double check_dual_shift_product(const DilogConfig& cfg, int M, std::complex<double> z);
/// Compact / compact-dual product ratio against the contour integral at a
/// parameter h in the upper half plane.
double check_product_ratio(const DilogConfig& cfg, std::complex<double> h,
                           std::complex<double> z);
double check_radius_independence(const DilogConfig& cfg, std::complex<double> z);
/// below(z) * above(-z) = 1, the relation the two detour sides actually satisfy.
double check_below_inversion(const DilogConfig& cfg, std::complex<double> z);
double check_psi_step(const DilogConfig& cfg, std::complex<double> q,
                      std::complex<double> z);

/// Batch evaluation, parallelized over samples; the serial variant is the
/// reference for the parallel one.
std::vector<std::complex<double>> phi_eval_batch(const DilogConfig& cfg,
                                                 const std::vector<std::complex<double>>& zs);
std::vector<std::complex<double>> phi_eval_batch_serial(
    const DilogConfig& cfg, const std::vector<std::complex<double>>& zs);

struct DilogCheck {
  std::string name;
  int samples = 0;
  double max_residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// Runs every identity check on deterministic sample grids.
std::vector<DilogCheck> run_dilog_suite(const DilogConfig& cfg);
bool suite_ok(const std::vector<DilogCheck>& checks);
std::string render_dilog_table(const std::vector<DilogCheck>& checks);

}  // namespace cvq
