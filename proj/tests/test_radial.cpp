#include "support.hpp"

#include "hartree/errors.hpp"
#include "hartree/newtonian.hpp"

#include <doctest.h>

#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace hartree;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

// Newtonian potential of exp(-a r^2): (pi/a)^{3/2} erf(sqrt(a) r) / r.
double gaussian_potential(double a, double r) {
  const double c = std::pow(pi / a, 1.5);
  if (r == 0.0) return c * 2.0 * std::sqrt(a / pi);
  return c * std::erf(std::sqrt(a) * r) / r;
}

}  // namespace

TEST_CASE("radial potential of a Gaussian density") {
  const RadialGrid grid{12.0, 2400};
  const auto u = sample_profile(grid, [](double r) { return std::exp(-r * r); });
  const auto phi = radial_potential(u);
  CHECK(phi.far_field == FarField::Coulomb);
  for (double r : {0.0, 0.3, 1.0, 2.5, 6.0, 11.0})
    CHECK(phi(r) == Approx(gaussian_potential(2.0, r)).epsilon(2e-5));
  // exterior continuation
  CHECK(phi(40.0) == Approx(gaussian_potential(2.0, 40.0)).epsilon(2e-5));
}

TEST_CASE("two-center integral of Gaussians") {
  const RadialGrid grid{10.0, 2000};
  const double a = 1.0, b = 0.5;
  const auto f = sample_profile(grid, [&](double r) { return std::exp(-a * r * r); });
  const auto g = sample_profile(grid, [&](double r) { return std::exp(-b * r * r); });
  for (double d : {0.0, 0.7, 2.0, 4.0}) {
    const double exact = std::pow(pi / (a + b), 1.5) * std::exp(-a * b * d * d / (a + b));
    CHECK(two_center_integral(f, g, d) == Approx(exact).epsilon(2e-5));
  }
  CHECK_THROWS_AS(two_center_integral(f, g, -1.0), Error);
}

TEST_CASE("ground state identities") {
  const auto& s = test::stats();
  CHECK(s.nehari_residual < 1e-10);
  CHECK(s.pohozaev_residual < 1e-4);
  CHECK(s.M_w / s.K_w == Approx(3.0).epsilon(1e-3));
  CHECK(s.P_w / s.K_w == Approx(4.0).epsilon(1e-3));
  CHECK(s.E_w == Approx(s.K_w).epsilon(1e-3));  // E = (K + M)/2 - P/4 = K
  CHECK_FALSE(s.degenerate);

  const auto& w = test::ground_state();
  CHECK(radial_equation_residual(w, 1.0, 1.0) < 1e-3);
  // positive and decreasing
  CHECK(w.values.minCoeff() >= 0.0);
  for (Eigen::Index i = 1; i < w.values.size(); ++i) REQUIRE(w.values[i] <= w.values[i - 1] + 1e-15);
}

TEST_CASE("Pohozaev residual shrinks under grid refinement") {
  const auto coarse = ground_state_stats(solve_ground_state({30.0, 750}));
  const auto mid = ground_state_stats(solve_ground_state({30.0, 1500}));
  const auto& fine = test::stats();
  CHECK(mid.pohozaev_residual < coarse.pohozaev_residual);
  CHECK(fine.pohozaev_residual < mid.pohozaev_residual);
  // second order
  CHECK(coarse.pohozaev_residual / mid.pohozaev_residual == Approx(4.0).epsilon(0.1));
}

TEST_CASE("far field of the ground-state potential is M / r") {
  const auto& w = test::ground_state();
  const auto phi = radial_potential(w);
  CHECK(phi(20.0) * 20.0 == Approx(test::stats().M_w).epsilon(1e-3));
  CHECK(radial_mass(w) == Approx(test::stats().M_w).epsilon(1e-10));
}

TEST_CASE("decay of the ground state") {
  const auto& w = test::ground_state();
  CHECK(w.tail_rate == Approx(1.0).epsilon(0.1));
  const auto corrected = decay_report(w, 10.0, 15.0, DecayLaw::CoulombCorrected);
  CHECK(corrected.relative_variation < 0.05);
  const auto plain = decay_report(w, 10.0, 15.0, DecayLaw::Exponential);
  CHECK(plain.relative_variation > corrected.relative_variation);
  CHECK_THROWS_AS(decay_report(w, 10.0, 25.0), Error);
}

TEST_CASE("solver failure modes") {
  SUBCASE("short grid") {
    try {
      solve_ground_state({5.0, 500});
      FAIL("expected an accuracy error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Accuracy);
    }
  }
  SUBCASE("bad grid") { CHECK_THROWS_AS(solve_ground_state({30.0, 10}), Error); }
  SUBCASE("degenerate guess") {
    const RadialGrid g{};
    try {
      solve_ground_state(g, {}, Eigen::VectorXd::Zero(g.size()));
      FAIL("expected a degenerate-input error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateInput);
    }
  }
  SUBCASE("iteration cap") {
    try {
      solve_ground_state({}, {2, 1e-14});
      FAIL("expected non-convergence");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonConvergence);
      CHECK(std::isfinite(e.value()));
    }
  }
}

TEST_CASE("profile cache round trip and corruption") {
  const auto dir = test::scratch_dir("cache");
  const auto path = dir / "w.csv";
  const auto& w = test::ground_state();
  write_profile_cache(w, path);
  const auto back = read_profile_cache(path, w.grid);
  CHECK((back.values - w.values).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(read_profile_cache(path, RadialGrid{30.0, 1500}), Error);

  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  in.close();
  std::string text = ss.str();
  // flip the last digit of a row in the middle of the file
  std::size_t pos = text.size() / 2;
  pos = text.find('\n', pos) - 1;
  REQUIRE(std::isdigit(static_cast<unsigned char>(text[pos])));
  text[pos] = text[pos] == '1' ? '2' : '1';
  std::ofstream(path) << text;
  try {
    read_profile_cache(path);
    FAIL("expected a checksum error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Checksum);
  }
  CHECK_THROWS_AS(read_profile_cache(dir / "missing.csv"), Error);
}
