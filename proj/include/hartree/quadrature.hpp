#pragma once

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <utility>

namespace hartree {

/// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
template <typename Scalar = double>
std::pair<Eigen::Matrix<Scalar, Eigen::Dynamic, 1>, Eigen::Matrix<Scalar, Eigen::Dynamic, 1>> gauss_legendre(int n) {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Matrix jacobi = Matrix::Zero(n, n);
  for (int i = 1; i < n; ++i) {
    const Scalar b = Scalar(i) / std::sqrt(Scalar(4) * i * i - Scalar(1));
    jacobi(i, i - 1) = b;
    jacobi(i - 1, i) = b;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(jacobi);
  Vector nodes = es.eigenvalues();
  Vector weights = Scalar(2) * es.eigenvectors().row(0).transpose().array().square().matrix();
  return {nodes, weights};
}

/// Mean of 1/|x| over the unit cube [-1/2, 1/2]^3 (equals its integral).
/// Splits the cube into six pyramids over its faces:
/// 6 * (1/4) * int_face 1/|p| dA.
inline double unit_cube_inverse_distance_mean() {
  const auto [x, w] = gauss_legendre<double>(48);
  double face = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      const double y = 0.5 * x[i], z = 0.5 * x[j];
      face += 0.25 * w[i] * w[j] / std::sqrt(0.25 + y * y + z * z);
    }
  return 1.5 * face;
}

}  // namespace hartree
