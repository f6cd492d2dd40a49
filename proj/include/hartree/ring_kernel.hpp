#pragma once

#include "hartree/errors.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace hartree {

/// Recursive halving sum; plain loop below 64 terms.
template <typename Scalar>
Scalar pairwise_sum(std::span<const Scalar> v) {
  if (v.size() <= 64) {
    Scalar s = 0;
    for (Scalar t : v) s += t;
    return s;
  }
  const auto h = v.size() / 2;
  return pairwise_sum(v.first(h)) + pairwise_sum(v.subspan(h));
}

/// g(x, y, k) = sum_{j=1..k} (x^2 + y^2 - 2 x y cos((2j-1) pi / k))^{-1/2}.
/// Pairwise accumulation for k > 10^4. Error(Domain) unless x, y > 0, k >= 1.
template <typename Scalar = double>
Scalar g_sum(Scalar x, Scalar y, long k) {
  if (!(x > 0) || !(y > 0)) throw Error(ErrorKind::Domain, "g_sum needs x, y > 0");
  if (k < 1) throw Error(ErrorKind::Domain, "g_sum needs k >= 1", static_cast<double>(k));
  const Scalar pi = std::numbers::pi_v<Scalar>;
  // x^2 + y^2 - 2xy cos t = (x - y)^2 + 4xy sin^2(t/2), free of cancellation near x = y
  auto term = [&](long j) {
    const Scalar s = std::sin((2 * j - 1) * pi / (2 * k));
    return 1 / std::sqrt((x - y) * (x - y) + 4 * x * y * s * s);
  };
  if (k <= 10000) {
    Scalar acc = 0;
    for (long j = 1; j <= k; ++j) acc += term(j);
    return acc;
  }
  std::vector<Scalar> t(static_cast<size_t>(k));
  for (long j = 1; j <= k; ++j) t[static_cast<size_t>(j - 1)] = term(j);
  return pairwise_sum(std::span<const Scalar>(t));
}

/// sum_{l=1..k-1} 1 / (2 sin(l pi / k)): the inverse-distance sum from one
/// vertex of a unit-radius regular k-gon to the others.
double self_ring_sum(long k);

/// (pi / (k ln k)) self_ring_sum(k): the finite-k factor relating the exact
/// same-ring interaction to its k ln k asymptote. Error(Domain) for k < 2.
double self_ring_factor(long k);

struct RingSumReport {
  double value = 0.0;
  /// k / (2 min + |x - y|); strict for k >= 2 (equality at k = 1).
  double lower_bound = 0.0;
  /// k / |x - y|; +inf on the diagonal.
  double upper_bound_distance = 0.0;
  /// The logarithmic bound with its o(1) made explicit: g(m, m, k) with
  /// m = min(x, y), which dominates g(x, y, k) for x != y.
  double upper_bound_log = 0.0;
  /// (2 / (pi m)) k ln k, the leading form the logarithmic bound is quoted in.
  double log_asymptote = 0.0;
  /// Present only for x = y: (2 / (pi x)) k ln k.
  std::optional<double> diagonal_asymptote;
  /// Present only for x = y: (k / (pi x)) (ln k + ln(8 / pi) + Euler gamma),
  /// the diagonal law obtained from direct summation (error O(1/(k x))).
  std::optional<double> diagonal_refined;
  bool sandwich_holds = true;
};

RingSumReport ring_bounds(double x, double y, long k);

/// sum_j 1 / |x^1 - y^j| from the planar ring coordinates.
double mixed_distance_sum(double r, double rho, long k);

}  // namespace hartree
