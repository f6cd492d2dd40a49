#pragma once

#include "hartree/field3d.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <string>
#include <utility>

namespace hartree {

/// Sign patterns of the four solution families. Letters are per component
/// (1, 2, 3); components 1 and 2 always share a letter. P: all signs +1,
/// A: sign (-1)^j on the j-th peak (requires even k).
enum class Variant { PPP, AAA, PPA, AAP };

std::string to_string(Variant v);
/// Throws Error(Validation) for anything but the four names.
Variant parse_variant(const std::string& s);
bool inner_alternating(Variant v);
bool outer_alternating(Variant v);

/// Two interleaved planar k-gons: x^j at angle 2(j-1)pi/k on radius r
/// (components 1-2), y^j at angle (2j-1)pi/k on radius rho (component 3).
struct PeakConfig {
  int k = 0;
  double r = 0.0;
  double rho = 0.0;
  Variant variant = Variant::PPP;
  Eigen::Matrix3Xd centers_inner;
  Eigen::Matrix3Xd centers_outer;
  Eigen::VectorXd signs_inner;
  Eigen::VectorXd signs_outer;

  /// Rotation by 2pi/k multiplies the inner (outer) field by this sign.
  double inner_rotation_sign() const { return inner_alternating(variant) ? -1.0 : 1.0; }
  double outer_rotation_sign() const { return outer_alternating(variant) ? -1.0 : 1.0; }
  /// Reflection x2 -> -x2 maps y^j to y^{k+1-j}; for an alternating outer
  /// ring this flips the sign, so component 3 is odd in x2.
  double outer_x2_parity() const { return outer_alternating(variant) ? -1.0 : 1.0; }
  /// Largest |center| over both rings.
  double extent() const { return std::max(r, rho); }
};

/// Errors: Domain for k < 1 or non-positive radii, Parity for an
/// alternating letter with odd k.
PeakConfig build_config(int k, double r, double rho, Variant variant);

/// [C1 (k ln k)^{1/(1-m)}, C2 (k ln k)^{1/(1-m)}]. k is real so the formula
/// can be probed off the integers. Errors: ExponentBlowUp for m >= 1,
/// Domain for m < 1/2, k ln k <= 0 or not 0 < C1 <= C2.
std::pair<double, double> s_k_window(double k, double m, double C1, double C2);

/// max over nodes x of |u(R x) - sign u(x)| with R the rotation by 2pi/k
/// about the x3 axis, together with the reflection defects
/// |u(x') - x2_parity u(x)| (x2 -> -x2) and |u(x'') - u(x)| (x3 -> -x3). Values off the node hull are skipped;
/// off-node values use trilinear interpolation.
double symmetry_deviation(const Field3D& field, int k, double sign, double x2_parity = 1.0);

}  // namespace hartree
