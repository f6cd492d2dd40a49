#pragma once

#include "hartree/ground_state.hpp"
#include "hartree/profiles.hpp"

#include <filesystem>
#include <string>

namespace test {

// Solved once per process on the default grid.
inline const hartree::RadialProfile& ground_state() {
  static const hartree::RadialProfile w = hartree::solve_ground_state(hartree::RadialGrid{});
  return w;
}

inline const hartree::GroundStateStats& stats() {
  static const hartree::GroundStateStats s = hartree::ground_state_stats(ground_state());
  return s;
}

// mu = (2, 2, 1), beta12 = 1, lambda = 1; a1 = a3 = 1 with m = 1/2.
inline hartree::SystemParams case1_params() {
  hartree::SystemParams p;
  p.mu = {2.0, 2.0, 1.0};
  p.beta = {1.0, -0.1, -0.1};
  p.lambda = 1.0;
  p.potentials[0] = {1.0, 0.5, 2.0, 1.0};
  p.potentials[1] = {0.0, 0.8, 2.0, 1.0};
  p.potentials[2] = {1.0, 0.5, 2.0, 1.0};
  return p;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("hartree_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace test
