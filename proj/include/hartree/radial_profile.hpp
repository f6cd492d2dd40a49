#pragma once

#include <Eigen/Core>

#include <limits>
#include <string>
#include <vector>

namespace hartree {

/// Uniform radial grid r_i = i * spacing, i = 0..n_points.
struct RadialGrid {
  double r_max = 30.0;
  int n_points = 3000;

  double spacing() const { return r_max / n_points; }
  double node(Eigen::Index i) const { return static_cast<double>(i) * spacing(); }
  Eigen::Index size() const { return n_points + 1; }
  Eigen::VectorXd nodes() const { return Eigen::VectorXd::LinSpaced(size(), 0.0, r_max); }

  /// Throws Error(Domain) unless spacing > 0 and n_points >= 100.
  void validate() const;

  bool operator==(const RadialGrid&) const = default;
};

/// How a profile continues past the last grid node.
enum class FarField {
  Zero,     ///< identically zero (bound states, squared densities)
  Coulomb,  ///< value(r_max) * r_max / r (exterior Newtonian potential)
};

/// Radially symmetric function sampled on a RadialGrid.
struct RadialProfile {
  RadialGrid grid;
  Eigen::VectorXd values;
  FarField far_field = FarField::Zero;
  double tail_rate = std::numeric_limits<double>::quiet_NaN();
  double tail_amplitude = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> warnings;

  RadialProfile() = default;
  RadialProfile(RadialGrid g, Eigen::VectorXd v, FarField ff = FarField::Zero)
      : grid(g), values(std::move(v)), far_field(ff) {}

  /// Evaluate at any r >= 0: cubic Lagrange interpolation inside the grid
  /// (even reflection at the origin), far-field rule outside.
  double operator()(double r) const;

  /// Radius beyond which the profile vanishes; +inf for Coulomb tails.
  double support_radius() const;

  double max_abs() const { return values.size() ? values.cwiseAbs().maxCoeff() : 0.0; }
};

/// Sample f on the nodes of `grid`.
template <typename F>
RadialProfile sample_profile(const RadialGrid& grid, F&& f, FarField ff = FarField::Zero) {
  Eigen::VectorXd v(grid.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = f(grid.node(i));
  return RadialProfile(grid, std::move(v), ff);
}

/// 4*pi * int_0^rmax u^2 r^2 dr by the trapezoid rule.
double radial_mass(const RadialProfile& u);

}  // namespace hartree
