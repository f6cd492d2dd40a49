#include "hartree/errors.hpp"
#include "hartree/field3d.hpp"
#include "hartree/quadrature.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>

using namespace hartree;
using doctest::Approx;

TEST_CASE("cube average of the Coulomb kernel") {
  // closed form of int_{[-1/2,1/2]^3} dx / |x|
  const double s3 = std::sqrt(3.0);
  const double exact = 3.0 * std::log((s3 + 1.0) / (s3 - 1.0)) - std::numbers::pi / 2.0;
  CHECK(unit_cube_inverse_distance_mean() == Approx(exact).epsilon(1e-12));
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const auto [x, w] = gauss_legendre<double>(8);
  CHECK(w.sum() == Approx(2.0).epsilon(1e-14));
  double m14 = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) m14 += w[i] * std::pow(x[i], 14);
  CHECK(m14 == Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("grid potential of a Gaussian density") {
  const double L = 8.0;
  const double c = std::pow(std::numbers::pi / 2.0, 1.5);
  auto exact = [&](double r) { return r == 0.0 ? c * 2.0 * std::sqrt(2.0 / std::numbers::pi) : c * std::erf(std::sqrt(2.0) * r) / r; };
  auto worst_error = [&](int n) {
    const auto sq = Field3D::sample(L, n, [](const Eigen::Vector3d& x) { return std::exp(-2.0 * x.squaredNorm()); });
    const Field3D phi = grid_potential(sq);
    double worst = 0.0;
    for (int k = 0; k < n; k += 3)
      for (int j = 0; j < n; j += 3)
        for (int i = 0; i < n; i += 3) {
          const double r = sq.node(i, j, k).norm();
          worst = std::max(worst, std::abs(phi(i, j, k) - exact(r)) / exact(r));
        }
    // total mass reappears in the far field
    const Eigen::Vector3d far(L - 0.5, 0.0, 0.0);
    CHECK(phi.interpolate(far) * far.norm() == Approx(sq.integral()).epsilon(2e-3));
    return worst;
  };
  const double coarse = worst_error(48), fine = worst_error(96);
  CHECK(coarse < 2e-2);
  CHECK(fine < 5e-3);
  // second order in the spacing
  CHECK(coarse / fine > 3.0);
}

TEST_CASE("convolution contract on the box boundary") {
  Field3D flat(4.0, 32);
  flat.values.setOnes();
  FreeSpaceConvolver conv(32, flat.spacing());
  try {
    conv.potential(flat);
    FAIL("expected a contract violation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ContractViolation);
  }
  CHECK_THROWS_AS(Field3D(4.0, 33), Error);
  CHECK_THROWS_AS(Field3D(4.0, 16), Error);
}

TEST_CASE("trilinear interpolation and inner product") {
  const auto f = Field3D::sample(2.0, 32, [](const Eigen::Vector3d& x) { return 1.0 + 2.0 * x[0] - x[1] + 0.5 * x[2]; });
  const Eigen::Vector3d p(0.123, -0.456, 0.789);
  CHECK(f.interpolate(p) == Approx(1.0 + 2.0 * p[0] - p[1] + 0.5 * p[2]).epsilon(1e-12));
  CHECK(std::isnan(f.interpolate(Eigen::Vector3d(5.0, 0.0, 0.0))));
  const auto one = Field3D::sample(2.0, 32, [](const Eigen::Vector3d&) { return 1.0; });
  CHECK(inner_product(one, one) == Approx(64.0).epsilon(1e-12));
  CHECK(inner_product(f, one) == Approx(f.integral()).epsilon(1e-12));
}

TEST_CASE("field dump round trip") {
  const auto dir = test::scratch_dir("field");
  const auto f = Field3D::sample(3.0, 32, [](const Eigen::Vector3d& x) { return std::exp(-x.squaredNorm()); },
                                 Eigen::Vector3d(1.0, 2.0, 3.0));
  write_field(f, dir / "u");
  const Field3D g = read_field(dir / "u");
  CHECK(g.n_per_axis == 32);
  CHECK(g.box_half_width == 3.0);
  CHECK(g.center == f.center);
  CHECK(g.values == f.values);

  {
    std::fstream bin(dir / "u.bin", std::ios::in | std::ios::out | std::ios::binary);
    bin.seekp(8 * 1000);
    const double junk = 42.0;
    bin.write(reinterpret_cast<const char*>(&junk), sizeof junk);
  }
  try {
    read_field(dir / "u");
    FAIL("expected a checksum error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Checksum);
  }
}
