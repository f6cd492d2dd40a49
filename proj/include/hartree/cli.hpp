#pragma once

#include "hartree/energy.hpp"
#include "hartree/ground_state.hpp"
#include "hartree/json_io.hpp"
#include "hartree/reduced_model.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace hartree::cli {

/// Everything a subcommand needs. Loaded from the JSON run document, then
/// overridden by command-line flags; validated before any computation.
struct RunConfig {
  SystemParams params;
  RadialGrid radial;
  SolverOptions solver;
  GridSpec grid;
  std::vector<int> ks;
  Variant variant = Variant::PPP;
  RingSumModel ring_model = RingSumModel::Asymptotic;
  std::optional<double> r, rho;  ///< verify-expansion / construct geometry
  RadiusRule radius_rule{0.5, 0.5};
  PatchSpec patch;
  int scan_n = 200;
  bool verify_expansion = false;  ///< report: include the grid expansion check
  bool allow_large = false;
  std::filesystem::path out_dir = "out";
  std::filesystem::path cache_dir = "cache";
};

json to_json(const RunConfig& c);
/// Reads a run document: {"params": .., "radial": {"r_max", "n_points"},
/// "solver": {"tolerance", "max_iterations"}, "grid": {"box_half_width",
/// "n_per_axis"}, "k": [..], "variant", "ring_sum_model": "asymptotic" |
/// "exact", "r", "rho", "radius_rule": {"C_r", "C_rho"}, "patch": {..},
/// "scan_n", "verify_expansion", "allow_large", "out", "cache"}.
RunConfig load_run_config(const std::filesystem::path& path);
void validate(const RunConfig& c);

/// Cached ground state: reads `<cache>/w_rmax<R>_n<N>.csv`, re-solving (with
/// a warning on `log`) when the cache is missing or fails verification.
RadialProfile cached_ground_state(const RunConfig& c, std::ostream& log);

/// Subcommand bodies. Each returns the process exit code; outputs land in
/// c.out_dir.
int cmd_ground_state(const RunConfig& c, std::ostream& out, std::ostream& log);
int cmd_constants(const RunConfig& c, std::ostream& out, std::ostream& log);
int cmd_landscape(const RunConfig& c, std::ostream& out, std::ostream& log);
int cmd_verify_expansion(const RunConfig& c, std::ostream& out, std::ostream& log);
int cmd_residual_scaling(const RunConfig& c, std::ostream& out, std::ostream& log);
int cmd_construct(const RunConfig& c, std::ostream& out, std::ostream& log);
int cmd_report(const RunConfig& c, std::ostream& out, std::ostream& log);
int cmd_ring_kernel(const RunConfig& c, double x, double y, std::ostream& out, std::ostream& log);

/// Full command-line entry point.
int run(int argc, char** argv);

}  // namespace hartree::cli
