#include "hartree/errors.hpp"
#include "hartree/landscape.hpp"
#include "hartree/nelder_mead.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace hartree;
using doctest::Approx;

namespace {

bool has_reason(const CaseVerdict& v, const std::string& needle) {
  return std::any_of(v.reasons.begin(), v.reasons.end(), [&](const std::string& r) { return r.find(needle) != std::string::npos; });
}

SystemParams with(double a3, double b13, double b23) {
  auto p = test::case1_params();
  p.potentials[2].a = a3;
  p.beta[1] = b13;
  p.beta[2] = b23;
  return p;
}

}  // namespace

TEST_CASE("Nelder-Mead on the Rosenbrock valley") {
  auto rosen = [](const Eigen::Vector2d& v) { return 100.0 * std::pow(v[1] - v[0] * v[0], 2) + std::pow(1.0 - v[0], 2); };
  const auto r = nelder_mead<double, 2>(rosen, Eigen::Vector2d(-1.2, 1.0), 0.5);
  CHECK(r.converged);
  CHECK(r.x[0] == Approx(1.0).epsilon(1e-6));
  CHECK(r.x[1] == Approx(1.0).epsilon(1e-6));
  const auto capped = nelder_mead<double, 2>(rosen, Eigen::Vector2d(-1.2, 1.0), 0.5, {1e-10, 20});
  CHECK_FALSE(capped.converged);
}

TEST_CASE("decoupled landscape peaks at (d1, d2)") {
  const auto c = compute_constants(with(1.0, 0.0, 0.0), test::stats());
  REQUIRE(c.D2 == 0.0);
  for (long k : {2L, 6L, 100L}) {
    const auto res = maximize_f(k, c, default_region(c));
    CAPTURE(k);
    CHECK(res.converged);
    CHECK(std::abs(res.x_star - c.d1) < 1e-6);
    CHECK(std::abs(res.y_star - c.d2) < 1e-6);
    CHECK(res.f_value == Approx(c.f1_at_d1 + c.f2_at_d2).epsilon(1e-12));
  }
}

TEST_CASE("coupled landscape maximizer is stationary") {
  const auto c = compute_constants(test::case1_params(), test::stats());
  const auto res = maximize_f(6, c, default_region(c), RingSumModel::Exact);
  REQUIRE(res.converged);
  CHECK(res.starts_converged >= 3);
  const double h = 1e-4;
  for (auto [dx, dy] : {std::pair{h, 0.0}, {-h, 0.0}, {0.0, h}, {0.0, -h}, {h, h}, {-h, h}})
    CHECK(f_xy(res.x_star + dx, res.y_star + dy, 6, c, RingSumModel::Exact) < res.f_value);

  const auto pr = peak_radii(6, c, res);
  CHECK(pr.r_star == Approx(res.x_star * radius_scale(6, c.m)).epsilon(1e-14));
  CHECK(pr.in_window);
  CHECK(pr.window_lo <= std::min(pr.r_star, pr.rho_star));
  const auto narrow = peak_radii(6, c, res, 0.1, 0.2);
  CHECK_FALSE(narrow.in_window);

  CHECK_THROWS_AS(maximize_f(1, c, default_region(c)), Error);
  CHECK_THROWS_AS(maximize_f(6, c, {1.0, 0.5, 1.0, 2.0}), Error);
}

TEST_CASE("landscape scan samples f") {
  const auto c = compute_constants(test::case1_params(), test::stats());
  const auto g = landscape_scan(8, c, {{0.5, 4.0, 0.5, 3.0}, 7, 5});
  REQUIRE(g.f.rows() == 7);
  REQUIRE(g.f.cols() == 5);
  CHECK(g.x[0] == 0.5);
  CHECK(g.y[4] == 3.0);
  CHECK(g.f(3, 2) == Approx(f_xy(g.x[3], g.y[2], 8, c)).epsilon(1e-14));
}

TEST_CASE("theorem case classification") {
  const auto& s = test::stats();
  SUBCASE("case 1") {
    const auto p = with(1.0, -0.1, -0.1);
    const auto v = theorem_conditions(p, compute_constants(p, s));
    CHECK(v.theorem_case == TheoremCase::Case1);
    CHECK(v.dual.empty());
    CHECK_FALSE(v.beta0_caveat);
  }
  SUBCASE("case 2") {
    const auto p = with(0.5, 0.0, 0.0);
    const auto c = compute_constants(p, s);
    CHECK(c.Lambda == Approx(1.0).epsilon(1e-12));
    CHECK(theorem_conditions(p, c).theorem_case == TheoremCase::Case2);
  }
  SUBCASE("case 2 with a small positive coupling") {
    const auto p = with(0.5, 0.01, 0.01);
    const auto v = theorem_conditions(p, compute_constants(p, s));
    CHECK(v.theorem_case == TheoremCase::Case2);
    CHECK(v.beta0_caveat);
  }
  SUBCASE("case 3") {
    const auto p = with(0.5, -0.1, -0.1);
    CHECK(theorem_conditions(p, compute_constants(p, s)).theorem_case == TheoremCase::Case3);
  }
  SUBCASE("Lambda = 1 with a large positive coupling fails") {
    const auto p = with(0.5, 5.0, 5.0);
    const auto v = theorem_conditions(p, compute_constants(p, s));
    CHECK(v.theorem_case == TheoremCase::None);
  }
  SUBCASE("near-degenerate Lambda reports both sides") {
    const auto p = with(0.5 * (1.0 + 1e-7), 0.0, 0.0);
    const auto v = theorem_conditions(p, compute_constants(p, s));
    CHECK(v.theorem_case == TheoremCase::Case1);
    CHECK_FALSE(v.dual.empty());
  }
  SUBCASE("outside the synchronization domain") {
    auto p = with(1.0, -0.1, -0.1);
    p.mu = {2.0, 3.0, 1.0};
    p.beta[0] = 2.5;
    CHECK_THROWS_AS(compute_constants(p, s), Error);
  }
  SUBCASE("a1 of the wrong sign") {
    auto p = with(1.0, -0.1, -0.1);
    p.potentials[0].a = -0.5;
    const auto v = theorem_conditions(p, compute_constants(p, s));
    CHECK(v.theorem_case == TheoremCase::None);
    CHECK(has_reason(v, "violated"));
  }
}
