#pragma once

#include "hartree/radial_profile.hpp"

namespace hartree {

/// phi(r) = (4 pi / r) int_0^r s^2 u^2 ds + 4 pi int_r^inf s u^2 ds for a
/// radial u. Integrals are truncated at r_max; the result carries a Coulomb
/// far field. A warning is attached when more than 1e-6 of the mass sits in
/// the outer tenth of the grid.
RadialProfile radial_potential(const RadialProfile& u);

/// Fraction of int u^2 d^3x carried by r in [0.9 r_max, r_max].
double tail_mass_fraction(const RadialProfile& u);

/// int f(|x - a|) g(|x - b|) d^3x with |a - b| = d, via bipolar coordinates:
/// (2 pi / d) int int_{|s-t| <= d <= s+t} f(s) g(t) s t ds dt, and
/// 4 pi int f g s^2 ds at d = 0. At most one argument may have a Coulomb
/// far field. Throws Error(Domain) for d < 0.
double two_center_integral(const RadialProfile& f, const RadialProfile& g, double d);

}  // namespace hartree
