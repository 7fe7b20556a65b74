#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "cvq/qdilog.hpp"

using namespace cvq;
using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST_CASE("strip and configuration") {
  DilogConfig cfg;
  CHECK(cfg.hbar == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));
  CHECK(strip_halfwidth(cfg.hbar) == doctest::Approx(kPi * (1.0 + cfg.hbar)));
  CHECK(in_strip(cfg, {100.0, 4.0}));
  CHECK(!in_strip(cfg, {0.0, 4.5}));
  CHECK_THROWS_AS(phi_eval(cfg, {0.0, 4.5}), std::domain_error);
  CHECK_THROWS_AS(phi_eval_at(cfg, {-0.2, 0.0}, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("value at the origin squares to the inversion constant") {
  DilogConfig cfg;
  cd p0 = phi_eval(cfg, 0.0);
  CHECK(std::abs(p0 * p0 - inversion_constant(cfg.hbar)) < 1e-10);
  // hbar = sqrt(2) - 1 makes hbar + 1/hbar = 2 sqrt(2).
  cd expect = std::exp(cd(0.0, -kPi * std::sqrt(2.0) / 6.0));
  CHECK(std::abs(inversion_constant(cfg.hbar) - expect) < 1e-15);
}

TEST_CASE("unitarity on the real line") {
  DilogConfig cfg;
  for (double x : {-4.0, -1.3, 0.0, 0.7, 2.9}) CHECK(check_unitarity(cfg, x) < cfg.tol);
}

TEST_CASE("step relation inside the strip") {
  DilogConfig cfg;
  for (double x : {-1.5, 0.2, 1.1}) {
    CHECK(check_step_relation(cfg, {x, 0.0}) < cfg.tol);
    CHECK(check_step_relation(cfg, {x, -0.7}) < cfg.tol);
  }
}

TEST_CASE("inversion duality and detours") {
  DilogConfig cfg;
  for (cd z : {cd(0.4, 0.3), cd(-1.2, -0.5), cd(2.0, 1.0)}) {
    CHECK(check_inversion(cfg, z) < cfg.tol);
    CHECK(check_duality(cfg, z) < cfg.tol);
    CHECK(check_radius_independence(cfg, z) < cfg.tol);
    CHECK(check_below_inversion(cfg, z) < cfg.tol);
  }
}

TEST_CASE("continuation agrees with the direct integral") {
  DilogConfig cfg;
  for (cd z : {cd(0.3, 0.1), cd(-0.9, -2.0), cd(1.4, 3.0)})
    CHECK(std::abs(phi_continue(cfg, z) - phi_eval(cfg, z)) < cfg.tol);
}

TEST_CASE("zero and pole of the continued function") {
  DilogConfig cfg;
  cd corner(0.0, kPi * (1.0 + cfg.hbar));
  CHECK(std::abs(phi_continue(cfg, corner)) < 1e-12);
  CHECK_THROWS_AS(phi_continue(cfg, -corner), std::domain_error);
  CHECK_THROWS_AS(phi_continue(cfg, cd(0.0, -kPi * (1.0 + 3.0 * cfg.hbar))), std::domain_error);
  // Far from the pole lattice the continuation is fine at large negative height.
  CHECK(std::isfinite(std::abs(phi_continue(cfg, cd(2.0, -3.0 * kPi)))));
}

TEST_CASE("shift products") {
  DilogConfig cfg;
  for (int M = -3; M <= 3; ++M) {
    CHECK(check_shift_product(cfg, M, {0.6, 0.0}) < cfg.tol);
    CHECK(check_shift_product(cfg, M, {-1.1, 0.0}) < cfg.tol);
    CHECK(check_dual_shift_product(cfg, M, {0.5, 0.0}) < cfg.tol);
    CHECK(check_dual_shift_product(cfg, M, {-0.7, 0.0}) < cfg.tol);
  }
}

TEST_CASE("compact product") {
  DilogConfig cfg;
  const cd q(0.4, 0.25);
  CHECK(psi_eval(cfg, q, 0.0) == cd(1.0, 0.0));
  for (cd z : {cd(0.9, 0.3), cd(-0.4, 1.1), cd(2.0, -0.6)})
    CHECK(check_psi_step(cfg, q, z) < cfg.tol);
  CHECK_THROWS_AS(psi_eval(cfg, cd(1.2, 0.0), cd(0.5, 0.0)), std::invalid_argument);
  // z = -1/q sits on the first pole of the product.
  CHECK_THROWS_AS(psi_eval(cfg, q, -1.0 / q), std::domain_error);
}

TEST_CASE("compact against contour at complex parameter") {
  DilogConfig cfg;
  const cd h(0.4, 0.3);
  for (cd z : {cd(0.0, 0.0), cd(0.1, 0.0), cd(-0.5, 0.3)})
    CHECK(check_product_ratio(cfg, h, z) < 1e-6);
}

TEST_CASE("batch evaluation matches serial") {
  DilogConfig cfg;
  std::vector<cd> zs;
  for (int k = 0; k < 40; ++k) zs.push_back(cd(-2.0 + 0.1 * k, 0.3 * std::sin(1.3 * k)));
  auto par = phi_eval_batch(cfg, zs);
  auto ser = phi_eval_batch_serial(cfg, zs);
  REQUIRE(par.size() == ser.size());
  for (size_t i = 0; i < par.size(); ++i) CHECK(std::abs(par[i] - ser[i]) < 1e-14);
}

TEST_CASE("full suite") {
  DilogConfig cfg;
  auto checks = run_dilog_suite(cfg);
  REQUIRE(!checks.empty());
  for (const auto& c : checks) {
    INFO(c.name << " residual " << c.max_residual);
    CHECK(c.pass);
  }
  CHECK(suite_ok(checks));
  CHECK(render_dilog_table(checks).find("FAIL") == std::string::npos);
}
