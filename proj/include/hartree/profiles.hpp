#pragma once

#include "hartree/radial_profile.hpp"

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <string>

namespace hartree {

/// V(r) = lambda + a / (1 + r^2)^{m/2}. At infinity this is
/// lambda + a / r^m + O(r^{-m-2}), hence theta = 2. a = 0 marks a constant
/// potential, whose m is then ignored (treated as infinite).
struct PotentialSpec {
  double a = 0.0;
  double m = 0.5;
  double theta = 2.0;
  double lambda = 1.0;

  bool constant() const { return a == 0.0; }
  double excess(double r) const { return a / std::pow(1.0 + r * r, 0.5 * m); }
  double value(double r) const { return lambda + excess(r); }
  /// inf over r >= 0.
  double infimum() const { return a < 0.0 ? lambda + a : lambda; }
};

struct SystemParams {
  Eigen::Vector3d mu{1.0, 1.0, 1.0};
  Eigen::Vector3d beta{0.0, 0.0, 0.0};  ///< beta12, beta13, beta23
  double lambda = 1.0;
  std::array<PotentialSpec, 3> potentials{};

  /// Symmetric coupling beta_ij for i != j in {0, 1, 2}.
  double coupling(int i, int j) const;
  /// Leading decay exponent m = min(m1, m2) = m3 over non-constant
  /// potentials; NaN when all three are constant.
  double leading_m() const;

  /// Throws Error(Validation) unless mu3 > 0, lambda > 0,
  /// lambda_1 = lambda_2 = 1, lambda_3 = lambda, m_i > 0, theta_i > 0,
  /// inf V_i > 0, and the non-constant exponents satisfy
  /// min(m1, m2) = m3 = m with m in [1/2, 1).
  void validate() const;
};

struct SyncCoefficients {
  double alpha = 0.0;
  double gamma = 0.0;
  double system_residual = 0.0;  ///< max deviation of the two defining identities
};

/// Positive (alpha, gamma) with mu1 a^2 + b12 g^2 = 1 and b12 a^2 + mu2 g^2 = 1.
/// Errors: Singularity when mu1 mu2 = b12^2, OutsideRegime when a square is
/// not positive.
SyncCoefficients sync_coefficients(double mu1, double mu2, double beta12);

enum class DomainBranch { I, II, III, Outside };

struct DomainVerdict {
  bool member = false;
  DomainBranch branch = DomainBranch::Outside;
  std::string caveat;
};

std::string to_string(DomainBranch b);

/// Classifies (mu, nu, beta12) against the three defining inequalities of
/// the non-degeneracy domain. Branch I with beta12 < 0 carries a caveat for
/// the excluded sequence, which is not computed.
DomainVerdict domain_membership(double mu1, double mu2, double beta12);

/// W(r) = (lambda / sqrt(mu3)) w(sqrt(lambda) r) on the grid of w.
/// Points mapped past r_max read zero when w vanishes there to 1e-12 of its
/// maximum, else Error(Range). Error(Domain) unless lambda, mu3 > 0.
RadialProfile scaled_bump(const RadialProfile& w, double lambda, double mu3);

/// Relative residual max|-Lap p + lambda p - mu phi_p p| / max|lambda p| of a
/// radial profile on its own grid (interior nodes below 0.7 r_max).
double radial_equation_residual(const RadialProfile& p, double lambda, double mu);

}  // namespace hartree
