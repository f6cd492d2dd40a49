#pragma once

#include "hartree/configurations.hpp"
#include "hartree/field3d.hpp"
#include "hartree/profiles.hpp"

#include <Eigen/Core>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hartree {

struct GridSpec {
  double box_half_width = 40.0;
  int n_per_axis = 128;
};

/// Desk-scale limits: k <= 8, L <= 40, n <= 192. Throws Error(Validation)
/// beyond them unless allow_large.
void check_envelope(int k, const GridSpec& grid, bool allow_large);

/// Radial ingredients shared by every ansatz: w, W, (alpha, gamma) and the
/// Newtonian potentials of the unit bumps.
struct BumpSet {
  RadialProfile w, W;
  RadialProfile phi_w, phi_W;
  double alpha = 0, gamma = 0;
  double P_w = 0;
};

BumpSet make_bumps(const RadialProfile& w, const SystemParams& params);

struct AnsatzFields {
  Field3D u1, u2, u3;
  PeakConfig config;
  SystemParams params;
};

/// u1 = sum s_j alpha w(. - x^j), u2 = sum s_j gamma w(. - x^j),
/// u3 = sum t_j W(. - y^j) on the box centered at the origin. Error(Geometry)
/// if any center is closer than 10 to the box boundary.
AnsatzFields assemble_ansatz(const PeakConfig& config, const SystemParams& params, const BumpSet& bumps,
                             const GridSpec& grid);

/// Signed parts of the energy functional; total is their sum.
struct EnergyBreakdown {
  std::array<double, 3> kinetic_and_potential{};  ///< (1/2) int |grad u_i|^2 + V_i u_i^2
  std::array<double, 3> self_interaction{};       ///< -(mu_i / 4) int phi_{u_i} u_i^2
  double cross_12 = 0, cross_13 = 0, cross_23 = 0;  ///< -(beta_ij / 2) int phi_{u_j} u_i^2
  double total = 0;
};

/// Newtonian potentials of u1^2, u2^2, u3^2 (empty for zero fields).
struct FieldPotentials {
  std::array<std::optional<Field3D>, 3> phi;
};

FieldPotentials field_potentials(const AnsatzFields& f, FreeSpaceConvolver& conv);

/// Grid energy: midpoint sums, forward-difference gradient (so the kinetic
/// term equals <u, -Lap_h u> for the 7-point Laplacian), potentials by
/// zero-padded convolution. Propagates ContractViolation.
EnergyBreakdown full_energy(const AnsatzFields& f);
EnergyBreakdown full_energy(const AnsatzFields& f, const FieldPotentials& phi);

/// Grid energy split into the sum of isolated single-bump energies, each
/// computed on a sub-box with the same spacing and node-aligned with the
/// global grid (so discretization error cancels), and the remainder.
struct GridInteraction {
  EnergyBreakdown full;
  double isolated_sum = 0;
  double interaction = 0;  ///< full.total - isolated_sum
};

GridInteraction grid_interaction_energy(const AnsatzFields& f, const BumpSet& bumps, int local_n = 128);

/// Semi-analytic energy from radial integrals at the exact center distances.
struct PairwiseEnergy {
  double self = 0;            ///< k (A0 + A~)
  double potential = 0;      ///< sum of (1/2) int (V_i - lambda_i) bump^2 terms
  double ring12 = 0;         ///< same-ring interactions of components 1-2
  double ring3 = 0;          ///< same-ring interactions of component 3
  double cross = 0;          ///< ring 1 x ring 2 couplings
  double total = 0;
  double interaction() const { return ring12 + ring3 + cross; }
  /// Conservative size of neglected overlap terms, sum over same-component
  /// pairs of P_w exp(-(1 - tau) d) with tau = 1/2.
  double overlap_error_bar = 0;
};

PairwiseEnergy pairwise_energy(const PeakConfig& config, const SystemParams& params, const BumpSet& bumps);

/// L2 norms over the box of -Lap_h u_i + V_i u_i - mu_i phi_i u_i -
/// sum_{j != i} beta_ij phi_j u_i (7-point Laplacian, interior nodes).
Eigen::Vector3d pde_residual(const AnsatzFields& f);
Eigen::Vector3d pde_residual(const AnsatzFields& f, const FieldPotentials& phi);

/// Residual on a cube patch of half width `half_width` and `n` nodes per axis
/// centered on x^1 (components 1-2) and on y^1 (component 3). Potentials
/// come from the radial potentials of each translated bump (overlap
/// densities dropped), so arbitrarily large rings stay cheap. The L2 norm is
/// taken over the ball of radius `ball_radius` around the patch center.
struct PatchSpec {
  double half_width = 16.0;
  int n_per_axis = 64;
  double ball_radius = 15.0;
};

Eigen::Vector3d patch_residual(const PeakConfig& config, const SystemParams& params, const BumpSet& bumps,
                               const PatchSpec& patch);

struct ResidualRow {
  int k = 0;
  double r = 0, rho = 0;
  double residual = 0;  ///< per-peak residual, Euclidean norm over components
  bool under_resolved = false;
  std::string note;
};

struct ResidualStudy {
  std::vector<ResidualRow> rows;
  double fitted_exponent = 0;  ///< least-squares slope of log residual vs log k
};

/// Radii r = C_r (k ln k)^{1/(1-m)}, rho = C_rho (k ln k)^{1/(1-m)}.
struct RadiusRule {
  double C_r = 1.0, C_rho = 1.0;
};

/// Patch residual per k. Rows whose nearest-peak distance leaves less than
/// 8 units of patch ball, or whose spacing exceeds 0.5, are flagged.
ResidualStudy residual_scaling_study(const std::vector<int>& ks, const RadiusRule& rule, const SystemParams& params,
                                     const BumpSet& bumps, const PatchSpec& patch = {}, Variant variant = Variant::PPP);

}  // namespace hartree
