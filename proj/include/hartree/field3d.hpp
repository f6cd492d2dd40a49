#pragma once

#include <Eigen/Core>

#include <filesystem>
#include <memory>

namespace hartree {

/// Scalar field on the uniform grid center + (-L + i h), i = 0..n-1, per
/// axis, h = 2L/n, stored x-fastest.
struct Field3D {
  double box_half_width = 0.0;
  int n_per_axis = 0;
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  Eigen::VectorXd values;

  Field3D() = default;
  Field3D(double half_width, int n, const Eigen::Vector3d& c = Eigen::Vector3d::Zero());

  double spacing() const { return 2.0 * box_half_width / n_per_axis; }
  double cell_volume() const { const double h = spacing(); return h * h * h; }
  Eigen::Index index(int i, int j, int k) const {
    return i + static_cast<Eigen::Index>(n_per_axis) * (j + static_cast<Eigen::Index>(n_per_axis) * k);
  }
  double coord(int i, int axis) const { return center[axis] - box_half_width + i * spacing(); }
  Eigen::Vector3d node(int i, int j, int k) const { return {coord(i, 0), coord(j, 1), coord(k, 2)}; }

  double operator()(int i, int j, int k) const { return values[index(i, j, k)]; }
  double& operator()(int i, int j, int k) { return values[index(i, j, k)]; }

  /// Throws Error(Domain) unless n >= 32 and even, L > 0, values sized and finite.
  void validate() const;

  bool same_grid(const Field3D& o) const {
    return box_half_width == o.box_half_width && n_per_axis == o.n_per_axis && center == o.center;
  }

  /// Trilinear interpolation; NaN outside the node hull.
  double interpolate(const Eigen::Vector3d& x) const;

  double integral() const { return cell_volume() * values.sum(); }
  double max_abs() const { return values.size() ? values.cwiseAbs().maxCoeff() : 0.0; }
  /// Largest |value| on the six boundary faces.
  double boundary_max_abs() const;

  template <typename F>
  static Field3D sample(double half_width, int n, F&& f, const Eigen::Vector3d& c = Eigen::Vector3d::Zero()) {
    Field3D out(half_width, n, c);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) out(i, j, k) = f(out.node(i, j, k));
    return out;
  }
};

/// h^3 sum a b.
double inner_product(const Field3D& a, const Field3D& b);

/// Free-space convolution with 1/|x| on a fixed grid shape, by zero padding
/// to (2n)^3. The kernel sample at the origin is the exact cell average of
/// 1/|x|. Holds the kernel spectrum and FFT plans; not thread-safe.
class FreeSpaceConvolver {
 public:
  FreeSpaceConvolver(int n_per_axis, double spacing);
  ~FreeSpaceConvolver();
  FreeSpaceConvolver(const FreeSpaceConvolver&) = delete;
  FreeSpaceConvolver& operator=(const FreeSpaceConvolver&) = delete;

  /// phi(x) = int sq(y) / |x - y| dy. Throws Error(ContractViolation) when sq
  /// exceeds 1e-10 of its maximum on the box boundary.
  Field3D potential(const Field3D& sq);

  int n_per_axis() const { return n_; }
  double spacing() const { return h_; }

 private:
  struct Impl;
  int n_;
  double h_;
  std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper around FreeSpaceConvolver.
Field3D grid_potential(const Field3D& sq);

/// Flat little-endian float64 dump (x fastest) at `<base>.bin` plus a JSON
/// sidecar `<base>.json` with box metadata and an FNV-1a checksum.
void write_field(const Field3D& f, const std::filesystem::path& base);
Field3D read_field(const std::filesystem::path& base);

}  // namespace hartree
