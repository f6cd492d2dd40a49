#pragma once

#include "hartree/ground_state.hpp"
#include "hartree/profiles.hpp"

#include <string>
#include <vector>

namespace hartree {

/// Which of m1, m2 is the leading (smaller) exponent of components 1-2.
enum class MOrder { M1Less, M2Less, Equal };
std::string to_string(MOrder o);

/// How same-ring interaction sums enter the reduced energy.
enum class RingSumModel {
  Asymptotic,  ///< sum_{i != j} 1/|x^i - x^j| replaced by k ln k / (pi r) per peak
  Exact,       ///< exact polygon sum self_ring_sum(k) / r per peak
};

struct ReducedConstants {
  double M_w = 0, K_w = 0, P_w = 0, C_w = 0;
  double alpha = 0, gamma = 0;
  double A0 = 0, A_tilde = 0;
  double B1 = 0, B2 = 0, B3 = 0;
  double D0 = 0, D1 = 0, D2 = 0;
  double Lambda = 0;
  double m = 0;
  MOrder order = MOrder::Equal;
  /// Leading potential coefficient of components 1-2: a1 B1, a2 B2 or
  /// a1 B1 + a2 B2 by `order`; and a3 B3.
  double lead12 = 0, lead3 = 0;
  double d1 = 0, d2 = 0;
  double f1_at_d1 = 0, f2_at_d2 = 0;
  /// False when the a-coefficient signs leave d1 or d2 undefined.
  bool valid_for_theorem = true;
  std::vector<std::string> notes;
};

/// All reduced-energy constants. C_w = M_w^2 (Newtonian far field).
/// Errors from sync_coefficients propagate; Validation from params.
ReducedConstants compute_constants(const SystemParams& params, const GroundStateStats& gs);

/// f1(x) = lead12 / x^m - D0 / x, f2(y) = lead3 / y^m - D1 / y.
/// Under RingSumModel::Exact, D0 and D1 carry self_ring_factor(k).
double f1(double x, const ReducedConstants& c, long k = 0, RingSumModel model = RingSumModel::Asymptotic);
double f2(double y, const ReducedConstants& c, long k = 0, RingSumModel model = RingSumModel::Asymptotic);

/// f(x, y) = f1(x) + f2(y) - pi D2 g(x, y, k) / (k ln k). Requires k >= 2.
double f_xy(double x, double y, long k, const ReducedConstants& c, RingSumModel model = RingSumModel::Asymptotic);

/// (k ln k)^{1/(1-m)}: reduced coordinates times this give ring radii.
double radius_scale(long k, double m);

/// k [A0 + A~ + (k ln k)^{-m/(1-m)} f(x, y)], the o(1) remainder omitted.
double F_hat(double x, double y, long k, const ReducedConstants& c, RingSumModel model = RingSumModel::Asymptotic);

/// k [A0 + A~ + a1 B1 / r^m1 + a2 B2 / r^m2 + a3 B3 / rho^m3
///    - D0 S / r - D1 S / rho - pi D2 g(r, rho, k)]
/// with S = k ln k (Asymptotic) or pi self_ring_sum(k) (Exact). Every
/// potential term is kept, including non-leading ones.
double asymptotic_energy(double r, double rho, long k, const ReducedConstants& c, const SystemParams& params,
                         RingSumModel model = RingSumModel::Asymptotic);

}  // namespace hartree
