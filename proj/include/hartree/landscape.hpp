#pragma once

#include "hartree/reduced_model.hpp"

#include <Eigen/Core>

#include <string>
#include <vector>

namespace hartree {

enum class TheoremCase { Case1, Case2, Case3, None };
std::string to_string(TheoremCase c);

struct CaseVerdict {
  TheoremCase theorem_case = TheoremCase::None;
  /// Non-empty when Lambda sits within 1e-6 (relative) of 1 but outside the
  /// 1e-9 detection band: the cases reachable on either side of Lambda = 1.
  std::vector<TheoremCase> dual;
  /// One entry per checked inequality, "<condition>: satisfied|violated".
  std::vector<std::string> reasons;
  /// True when beta13 > 0 or beta23 > 0, i.e. the verdict depends on the
  /// unquantified upper threshold for positive cross couplings.
  bool beta0_caveat = false;
};

/// Classifies the existence hypotheses: domain membership of
/// (mu1, mu2, beta12), mu3 > 0, a3 > 0, the branch condition on a1/a2, and
/// Lambda != 1 (case 1) or Lambda = 1 with D2 in [0, (d1/2) min(f1(d1), f2(d2)))
/// (case 2) or D2 < 0 with D0 + D1 + 2 D2 > 0 (case 3).
CaseVerdict theorem_conditions(const SystemParams& params, const ReducedConstants& c);

struct SearchRegion {
  double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
};

/// [d/20, 20 d] around (d1, d2) when both are defined, else [0.01, 100]^2.
SearchRegion default_region(const ReducedConstants& c);

struct MaximizerResult {
  double x_star = 0, y_star = 0;
  double f_value = 0;
  double grad_x = 0, grad_y = 0;  ///< central differences at the optimum
  double interior_margin = 0;     ///< distance to the region boundary
  bool converged = false;
  int starts_converged = 0;
};

/// Multi-start Nelder-Mead on -f (starts: (d1, d2) and four axis
/// perturbations), then Newton steps with finite-difference derivatives.
/// converged requires |grad f| < 1e-8 per coordinate and a positive margin.
/// Error(Domain) for an empty or non-positive region or k < 2.
MaximizerResult maximize_f(long k, const ReducedConstants& c, const SearchRegion& region,
                           RingSumModel model = RingSumModel::Asymptotic);

struct PeakRadii {
  double r_star = 0, rho_star = 0;
  double scale = 0;  ///< (k ln k)^{1/(1-m)}
  double C1 = 0, C2 = 0;
  double window_lo = 0, window_hi = 0;
  bool in_window = false;
};

/// r* = x* scale, rho* = y* scale; window check with C1 = 0.5 min(x*, y*),
/// C2 = 2 max(x*, y*) unless given (C1 > 0).
PeakRadii peak_radii(long k, const ReducedConstants& c, const MaximizerResult& res, double C1 = 0.0,
                     double C2 = 0.0);

struct LandscapeGrid {
  Eigen::VectorXd x, y;
  Eigen::MatrixXd f;  ///< f(x_i, y_j)
};

struct ScanSpec {
  SearchRegion region;
  int nx = 100, ny = 100;
};

LandscapeGrid landscape_scan(long k, const ReducedConstants& c, const ScanSpec& spec,
                             RingSumModel model = RingSumModel::Asymptotic);

}  // namespace hartree
