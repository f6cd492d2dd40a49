#include "hartree/configurations.hpp"
#include "hartree/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace hartree;
using doctest::Approx;

TEST_CASE("variant names") {
  for (Variant v : {Variant::PPP, Variant::AAA, Variant::PPA, Variant::AAP}) CHECK(parse_variant(to_string(v)) == v);
  CHECK_THROWS_AS(parse_variant("APP"), Error);
  CHECK(inner_alternating(Variant::AAP));
  CHECK_FALSE(outer_alternating(Variant::AAP));
  CHECK(outer_alternating(Variant::PPA));
}

TEST_CASE("ring geometry") {
  const int k = 7;
  const double r = 3.0, rho = 5.0;
  const auto c = build_config(k, r, rho, Variant::PPP);
  REQUIRE(c.centers_inner.cols() == k);
  const double pi = std::numbers::pi;
  for (int j = 0; j < k; ++j) {
    const double a = 2.0 * j * pi / k, b = (2.0 * j + 1.0) * pi / k;
    CHECK(c.centers_inner(0, j) == Approx(r * std::cos(a)));
    CHECK(c.centers_inner(1, j) == Approx(r * std::sin(a)));
    CHECK(c.centers_outer(0, j) == Approx(rho * std::cos(b)));
    CHECK(c.centers_outer(1, j) == Approx(rho * std::sin(b)));
    CHECK(c.centers_inner(2, j) == 0.0);
    CHECK(c.signs_inner[j] == 1.0);
  }
  // brute-force nearest distances: adjacent inner peaks sit 2 r sin(pi / k) apart
  double nearest = 1e300;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < i; ++j) nearest = std::min(nearest, (c.centers_inner.col(i) - c.centers_inner.col(j)).norm());
  CHECK(nearest == Approx(2.0 * r * std::sin(pi / k)));
  CHECK(c.extent() == rho);
}

TEST_CASE("sign patterns") {
  const auto c = build_config(6, 2.0, 2.0, Variant::AAA);
  for (int j = 0; j < 6; ++j) {
    // sign (-1)^j for the j-th peak, j counted from 1
    const double s = (j + 1) % 2 == 0 ? 1.0 : -1.0;
    CHECK(c.signs_inner[j] == s);
    CHECK(c.signs_outer[j] == s);
  }
  CHECK(c.inner_rotation_sign() == -1.0);
  const auto pa = build_config(6, 2.0, 2.0, Variant::PPA);
  CHECK(pa.signs_inner.minCoeff() == 1.0);
  CHECK(pa.signs_outer.minCoeff() == -1.0);
  CHECK(pa.outer_x2_parity() == -1.0);

  try {
    build_config(5, 2.0, 2.0, Variant::AAP);
    FAIL("expected a parity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parity);
  }
  CHECK_NOTHROW(build_config(5, 2.0, 2.0, Variant::PPP));
  CHECK_THROWS_AS(build_config(0, 2.0, 2.0, Variant::PPP), Error);
  CHECK_THROWS_AS(build_config(4, -2.0, 2.0, Variant::PPP), Error);
}

TEST_CASE("S_k window") {
  const double k = 6.0, m = 0.5;
  const double s = std::pow(k * std::log(k), 1.0 / (1.0 - m));
  const auto [lo, hi] = s_k_window(k, m, 0.5, 2.0);
  CHECK(lo == Approx(0.5 * s));
  CHECK(hi == Approx(2.0 * s));
  // the scale grows like (k ln k)^{1/(1-m)}
  const auto [lo2, hi2] = s_k_window(2.0 * k, m, 0.5, 2.0);
  CHECK(lo2 / lo == Approx(std::pow(2.0 * std::log(2.0 * k) / std::log(k), 2.0)));
  (void)hi2;

  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Numeric;
  };
  CHECK(kind([] { s_k_window(6.0, 1.0, 0.5, 2.0); }) == ErrorKind::ExponentBlowUp);
  CHECK(kind([] { s_k_window(6.0, 0.3, 0.5, 2.0); }) == ErrorKind::Domain);
  CHECK(kind([] { s_k_window(6.0, 0.5, 2.0, 0.5); }) == ErrorKind::Domain);
  CHECK(kind([] { s_k_window(1.0, 0.5, 0.5, 2.0); }) == ErrorKind::Domain);
}

TEST_CASE("symmetry deviation of sampled fields") {
  const int k = 4;
  const auto c = build_config(k, 3.0, 3.0, Variant::PPA);
  auto ring = [&](const Eigen::Matrix3Xd& centers, const Eigen::VectorXd& signs) {
    return Field3D::sample(8.0, 64, [&](const Eigen::Vector3d& x) {
      double v = 0.0;
      for (int j = 0; j < k; ++j) v += signs[j] * std::exp(-(x - centers.col(j)).squaredNorm());
      return v;
    });
  };
  const Field3D inner = ring(c.centers_inner, c.signs_inner);
  const Field3D outer = ring(c.centers_outer, c.signs_outer);
  CHECK(symmetry_deviation(inner, k, 1.0) < 2e-2);
  CHECK(symmetry_deviation(outer, k, -1.0, -1.0) < 2e-2);
  // wrong sign or wrong parity is detected
  CHECK(symmetry_deviation(outer, k, 1.0, -1.0) > 0.5);
  CHECK(symmetry_deviation(outer, k, -1.0, 1.0) > 0.5);
}
