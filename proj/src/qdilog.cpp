#include "cvq/qdilog.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cvq {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr cd kI{0.0, 1.0};

// 16-point Gauss-Legendre rule on [-1, 1], positive nodes.
constexpr double kNodes[8] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr double kWeights[8] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

template <typename F>
cd gauss_panel(double a, double b, const F& f) {
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  cd acc = 0.0;
  for (int i = 0; i < 8; ++i) {
    acc += kWeights[i] * (f(mid + half * kNodes[i]) + f(mid - half * kNodes[i]));
  }
  return half * acc;
}

// Folded straight-line integrand: the odd part of the origin pole cancels
// between the two half-lines, leaving
//
//   F(p) = 4 (e^{-ipz - pi(1+h)p} - e^{ipz - pi(1+h)p})
//          / (p (1 - e^{-2 pi p})(1 - e^{-2 pi h p})),
//
// whose exponents have negative real part throughout the strip, so the tail
// never overflows.
cd folded_integrand(cd h, cd z, double p) {
  cd ez = std::exp(-kI * p * z - kPi * (1.0 + h) * p) -
          std::exp(kI * p * z - kPi * (1.0 + h) * p);
  cd den = p * (1.0 - std::exp(-2.0 * kPi * p)) * (1.0 - std::exp(-2.0 * kPi * h * p));
  return 4.0 * ez / den;
}

cd raw_integrand(cd h, cd z, cd p) {
  return std::exp(-kI * p * z) / (p * std::sinh(kPi * p) * std::sinh(kPi * h * p));
}

cd contour_integral(const DilogConfig& cfg, cd h, cd z, bool below) {
  if (h.real() <= 0.0) throw std::invalid_argument("contour_integral: Re h must be positive");
  double gap = kPi * (1.0 + h.real()) - std::abs(z.imag());
  if (gap <= 0.0)
    throw std::domain_error("contour_integral: z outside the convergence strip");

  const double r = cfg.circle_radius;
  double pmax = std::log(8.0 / cfg.tail_threshold) / gap + 2.0;

  cd acc = 0.0;
  auto straight = [&](double p) { return folded_integrand(h, z, p); };
  double a = r;
  while (a < 1.0) {
    double b = std::min(2.0 * a, 1.0);
    acc += gauss_panel(a, b, straight);
    a = b;
  }
  while (a < pmax) {
    acc += gauss_panel(a, a + 1.0, straight);
    a += 1.0;
  }

  // Detour half-circle p = r e^{i t}: above runs t from pi down to 0, below
  // from pi up to 2 pi.
  auto arc = [&](double t) {
    cd p = r * std::exp(kI * t);
    return raw_integrand(h, z, p) * kI * p;
  };
  if (below)
    acc += gauss_panel(kPi, 2.0 * kPi, arc);
  else
    acc -= gauss_panel(0.0, kPi, arc);
  return acc;
}

cd step_factor(const DilogConfig& cfg, cd w) {
  return 1.0 + std::exp(kI * kPi * cfg.hbar) * std::exp(w);
}

double scaled_residual(cd a, cd b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

double strip_halfwidth(cd h) { return kPi * (1.0 + h.real()); }

bool in_strip(const DilogConfig& cfg, cd z) {
  return std::abs(z.imag()) < strip_halfwidth(cfg.hbar);
}

cd inversion_constant(cd h) {
  return std::exp(-kI * kPi / 12.0 * (h + 1.0 / h));
}

cd phi_eval_at(const DilogConfig& cfg, cd h, cd z) {
  return std::exp(-0.25 * contour_integral(cfg, h, z, false));
}

cd phi_eval(const DilogConfig& cfg, cd z) { return phi_eval_at(cfg, cfg.hbar, z); }

cd phi_eval_below(const DilogConfig& cfg, cd z) {
  return std::exp(-0.25 * contour_integral(cfg, cfg.hbar, z, true));
}

cd phi_continue(const DilogConfig& cfg, cd z) {
  const double hb = cfg.hbar;
  if (z.imag() < 0.0 && std::abs(z.real()) < cfg.pole_guard) {
    for (int l = 0; kPi * (2 * l + 1) < -z.imag() + 1.0; ++l)
      for (int m = 0; kPi * (2 * l + 1) + kPi * hb * (2 * m + 1) < -z.imag() + 1.0; ++m) {
        cd pole = -kI * (kPi * (2 * l + 1) + kPi * hb * (2 * m + 1));
        if (std::abs(z - pole) < cfg.pole_guard)
          throw std::domain_error("phi_continue: too close to a pole");
      }
  }

  const double margin = 0.95 * strip_halfwidth(hb);
  const cd step = 2.0 * kPi * kI * hb;
  cd w = z;
  cd factor = 1.0;
  while (w.imag() >= margin) {
    w -= step;
    factor *= step_factor(cfg, w);
  }
  while (w.imag() <= -margin) {
    cd f = step_factor(cfg, w);
    if (std::abs(f) < 1e-12)
      throw std::domain_error("phi_continue: continuation step hits a pole");
    factor /= f;
    w += step;
  }
  return factor * phi_eval(cfg, w);
}

cd psi_eval(const DilogConfig& cfg, cd q, cd z) {
  if (std::abs(q) >= 1.0)
    throw std::invalid_argument("psi_eval: base must have modulus below one");
  cd acc = 1.0;
  cd qp = q;
  cd q2 = q * q;
  for (int i = 0; i < cfg.max_psi_terms; ++i) {
    if (std::abs(qp) * std::abs(z) < cfg.tail_threshold) break;
    cd f = 1.0 + qp * z;
    if (std::abs(f) < cfg.pole_guard)
      throw std::domain_error("psi_eval: too close to a pole");
    acc /= f;
    qp *= q2;
  }
  return acc;
}

double check_unitarity(const DilogConfig& cfg, double x) {
  return std::abs(std::abs(phi_eval(cfg, cd(x, 0.0))) - 1.0);
}

double check_inversion(const DilogConfig& cfg, cd z) {
  cd lhs = phi_eval(cfg, z) * phi_eval(cfg, -z);
  cd rhs = inversion_constant(cfg.hbar) *
           std::exp(z * z / (4.0 * kPi * kI * cfg.hbar));
  return scaled_residual(lhs, rhs);
}

double check_duality(const DilogConfig& cfg, cd z) {
  DilogConfig dual = cfg;
  dual.hbar = 1.0 / cfg.hbar;
  return scaled_residual(phi_eval(dual, z / cfg.hbar), phi_eval(cfg, z));
}

double check_step_relation(const DilogConfig& cfg, cd z) {
  cd lhs = phi_eval(cfg, z + 2.0 * kPi * kI * cfg.hbar);
  cd rhs = step_factor(cfg, z) * phi_eval(cfg, z);
  return scaled_residual(lhs, rhs);
}

double check_shift_product(const DilogConfig& cfg, int M, cd z) {
  cd lhs = phi_continue(cfg, z + 2.0 * kPi * kI * cfg.hbar * static_cast<double>(M)) /
           phi_eval(cfg, z);
  int s = M < 0 ? -1 : 1;
  cd rhs = 1.0;
  for (int m = 1; m <= std::abs(M); ++m) {
    cd f = 1.0 + std::exp(kI * kPi * cfg.hbar * static_cast<double>(s * (2 * m - 1))) *
                     std::exp(z);
    rhs *= s > 0 ? f : 1.0 / f;
  }
  return scaled_residual(lhs, rhs);
}

double check_dual_shift_product(const DilogConfig& cfg, int M, cd z) {
  cd lhs = phi_continue(cfg, z + 2.0 * kPi * kI * static_cast<double>(M)) / phi_eval(cfg, z);
  int s = M < 0 ? -1 : 1;
  cd rhs = 1.0;
  for (int m = 1; m <= std::abs(M); ++m) {
    cd f = 1.0 + std::exp(kI * kPi / cfg.hbar * static_cast<double>(s * (2 * m - 1))) *
                     std::exp(z / cfg.hbar);
    rhs *= s > 0 ? f : 1.0 / f;
  }
  return scaled_residual(lhs, rhs);
}

double check_product_ratio(const DilogConfig& cfg, cd h, cd z) {
  if (h.imag() <= 0.0)
    throw std::invalid_argument("check_product_ratio: need Im h > 0");
  cd q = std::exp(kI * kPi * h);
  cd dual_base = std::exp(-kI * kPi / h);  // 1 / q-dual, modulus below one
  cd lhs = psi_eval(cfg, q, std::exp(z)) / psi_eval(cfg, dual_base, std::exp(z / h));
  cd rhs = phi_eval_at(cfg, h, z);
  return scaled_residual(lhs, rhs);
}

double check_radius_independence(const DilogConfig& cfg, cd z) {
  DilogConfig fine = cfg;
  fine.circle_radius = 0.5 * cfg.circle_radius;
  return scaled_residual(phi_eval(cfg, z), phi_eval(fine, z));
}

double check_below_inversion(const DilogConfig& cfg, cd z) {
  return scaled_residual(phi_eval_below(cfg, z) * phi_eval(cfg, -z), 1.0);
}

double check_psi_step(const DilogConfig& cfg, cd q, cd z) {
  cd lhs = psi_eval(cfg, q, q * q * z);
  cd rhs = (1.0 + q * z) * psi_eval(cfg, q, z);
  return scaled_residual(lhs, rhs);
}

std::vector<cd> phi_eval_batch(const DilogConfig& cfg, const std::vector<cd>& zs) {
  std::vector<cd> out(zs.size());
  const std::int64_t count = static_cast<std::int64_t>(zs.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i)
    out[static_cast<size_t>(i)] = phi_eval(cfg, zs[static_cast<size_t>(i)]);
  return out;
}

std::vector<cd> phi_eval_batch_serial(const DilogConfig& cfg, const std::vector<cd>& zs) {
  std::vector<cd> out(zs.size());
  for (size_t i = 0; i < zs.size(); ++i) out[i] = phi_eval(cfg, zs[i]);
  return out;
}

std::vector<DilogCheck> run_dilog_suite(const DilogConfig& cfg) {
  std::vector<DilogCheck> out;
  auto add = [&out](std::string name, int samples, double worst, double tol) {
    out.push_back({std::move(name), samples, worst, tol, worst < tol});
  };

  {
    double worst = 0.0;
    for (int k = 0; k < 100; ++k)
      worst = std::max(worst, check_unitarity(cfg, -3.0 + 6.0 * k / 99.0));
    add("unitarity", 100, worst, cfg.tol);
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
      cd z(-2.0 + 4.0 * k / 49.0, 1.5 * std::sin(2.4 * k));
      worst = std::max(worst, check_inversion(cfg, z));
    }
    add("inversion", 50, worst, cfg.tol);
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 25; ++k) {
      cd z(-2.0 + 4.0 * k / 24.0, 0.8 * std::cos(1.7 * k));
      worst = std::max(worst, check_duality(cfg, z));
    }
    add("duality", 25, worst, cfg.tol);
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 25; ++k) {
      cd z(-2.0 + 4.0 * k / 24.0, 0.5 * std::sin(2.9 * k));
      worst = std::max(worst, check_step_relation(cfg, z));
    }
    add("step relation", 25, worst, cfg.tol);
  }
  {
    double worst = 0.0;
    int samples = 0;
    for (int M = -3; M <= 3; ++M)
      for (int k = 0; k < 8; ++k, ++samples)
        worst = std::max(worst, check_shift_product(cfg, M, cd(-2.0 + 4.0 * k / 7.0, 0.0)));
    add("shift products", samples, worst, cfg.tol);
  }
  {
    double worst = 0.0;
    int samples = 0;
    for (int M = -3; M <= 3; ++M)
      for (int k = 0; k < 8; ++k, ++samples)
        worst = std::max(worst,
                         check_dual_shift_product(cfg, M, cd(-0.8 + 1.6 * k / 7.0, 0.0)));
    add("dual shift products", samples, worst, cfg.tol);
  }
  {
    const cd h(0.4, 0.3);
    const cd zs[5] = {cd(0.0, 0.0), cd(0.1, 0.0), cd(-0.3, 0.0), cd(0.5, 0.2),
                      cd(-1.0, 0.4)};
    double worst = 0.0;
    for (const cd& z : zs) worst = std::max(worst, check_product_ratio(cfg, h, z));
    add("compact ratio", 5, worst, 1e-6);
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      cd z(-2.0 + 4.0 * k / 9.0, 0.4 * std::sin(1.9 * k));
      worst = std::max(worst, check_radius_independence(cfg, z));
    }
    add("detour radius", 10, worst, cfg.tol);
  }
  {
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      cd z(-2.0 + 4.0 * k / 9.0, 0.4 * std::cos(2.3 * k));
      worst = std::max(worst, check_below_inversion(cfg, z));
    }
    add("below detour inversion", 10, worst, cfg.tol);
  }
  {
    const cd q(0.4, 0.25);
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      cd z = 0.1 * (k + 1) * std::exp(kI * (0.7 * k));
      worst = std::max(worst, check_psi_step(cfg, q, z));
    }
    add("compact step relation", 20, worst, cfg.tol);
  }
  return out;
}

bool suite_ok(const std::vector<DilogCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const DilogCheck& c) { return c.pass; });
}

std::string render_dilog_table(const std::vector<DilogCheck>& checks) {
  std::ostringstream ss;
  ss << std::left << std::setw(24) << "check" << std::right << std::setw(8) << "samples"
     << std::setw(14) << "residual" << std::setw(10) << "tol" << "  verdict\n";
  for (const DilogCheck& c : checks) {
    ss << std::left << std::setw(24) << c.name << std::right << std::setw(8) << c.samples
       << std::setw(14) << std::scientific << std::setprecision(3) << c.max_residual
       << std::setw(10) << std::setprecision(0) << c.tol << "  "
       << (c.pass ? "pass" : "FAIL") << "\n";
  }
  return ss.str();
}

}  // namespace cvq
