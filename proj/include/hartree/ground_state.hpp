#pragma once

#include "hartree/radial_profile.hpp"

#include <filesystem>
#include <optional>

namespace hartree {

struct SolverOptions {
  int max_iterations = 2000;
  double tolerance = 1e-10;  ///< on max|w_new - w| / max|w_new|
};

/// Integral quantities of a radial profile p:
/// K = int |grad p|^2, M = int p^2, P = int phi_p p^2, E = (K+M)/2 - P/4.
struct GroundStateStats {
  double K_w = 0, M_w = 0, P_w = 0, E_w = 0;
  double nehari_residual = 0;     ///< |K + M - P| / P
  double pohozaev_residual = 0;   ///< |K/2 + 3M/2 - 5P/4| / P
  bool degenerate = false;        ///< profile identically zero
};

/// Positive radial ground state of -Lap w + w = phi_w w in R^3 on `grid`.
///
/// Fixed point w <- (-Lap + 1)^{-1}[phi_w w] on v = r w (tridiagonal,
/// Dirichlet at 0 and r_max), each iterate rescaled so that K + M = P holds
/// exactly. Starts from exp(-r^2/2) unless `initial_guess` is given.
///
/// Errors: Domain (bad grid or tolerance), DegenerateInput (initial guess
/// with no positive part), NonConvergence (value = last update norm),
/// Accuracy (identity residual > 1e-2 or tail mass fraction > 1e-6).
RadialProfile solve_ground_state(const RadialGrid& grid, const SolverOptions& opts = {},
                                 const std::optional<Eigen::VectorXd>& initial_guess = std::nullopt);

GroundStateStats ground_state_stats(const RadialProfile& p);

/// Fills tail_rate (log-linear fit of p) and tail_amplitude (mean of
/// p r e^r) over [10, 15], or [0.3, 0.5] r_max on grids shorter than 21.5.
void fit_tail(RadialProfile& p);

enum class DecayLaw {
  Exponential,       ///< p(r) r e^r
  CoulombCorrected,  ///< p(r) r^{1 - M/2} e^r with M = int p^2
};

struct DecayReport {
  double r_a = 0, r_b = 0;
  DecayLaw law = DecayLaw::Exponential;
  double mean = 0;
  double relative_variation = 0;  ///< (max - min) / mean over the window
};

/// Plateau of the decay-normalized profile over [r_a, r_b]. Requires
/// 0 <= r_a < r_b <= 0.7 r_max, else Error(Range).
DecayReport decay_report(const RadialProfile& p, double r_a, double r_b,
                         DecayLaw law = DecayLaw::Exponential);

/// Profile cache: "# r_max=<..> n=<..> checksum=<hex>" then "r,value" rows.
void write_profile_cache(const RadialProfile& p, const std::filesystem::path& path);

/// Throws Error(Io) if unreadable, Error(Checksum) on checksum or metadata
/// mismatch (including against `expected` when given).
RadialProfile read_profile_cache(const std::filesystem::path& path,
                                 const std::optional<RadialGrid>& expected = std::nullopt);

}  // namespace hartree
