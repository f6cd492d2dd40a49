#include "hartree/ring_kernel.hpp"

#include <limits>

namespace hartree {

double self_ring_sum(long k) {
  if (k < 1) throw Error(ErrorKind::Domain, "self_ring_sum needs k >= 1", static_cast<double>(k));
  std::vector<double> t(static_cast<size_t>(k - 1));
  for (long l = 1; l < k; ++l) t[static_cast<size_t>(l - 1)] = 0.5 / std::sin(l * std::numbers::pi / k);
  return pairwise_sum(std::span<const double>(t));
}

double self_ring_factor(long k) {
  if (k < 2) throw Error(ErrorKind::Domain, "self_ring_factor needs k >= 2", static_cast<double>(k));
  const double kk = static_cast<double>(k);
  return std::numbers::pi * self_ring_sum(k) / (kk * std::log(kk));
}

RingSumReport ring_bounds(double x, double y, long k) {
  RingSumReport rep;
  rep.value = g_sum(x, y, k);
  const double m = std::min(x, y), gap = std::abs(x - y), kk = static_cast<double>(k);
  rep.lower_bound = kk / (2.0 * m + gap);
  rep.log_asymptote = 2.0 / (std::numbers::pi * m) * kk * std::log(kk);
  if (x == y) {
    rep.upper_bound_distance = std::numeric_limits<double>::infinity();
    rep.upper_bound_log = rep.value;
    rep.diagonal_asymptote = rep.log_asymptote;
    rep.diagonal_refined =
        kk / (std::numbers::pi * x) * (std::log(kk) + std::log(8.0 / std::numbers::pi) + std::numbers::egamma);
    rep.sandwich_holds = rep.lower_bound <= rep.value * (1.0 + 8.0 * std::numeric_limits<double>::epsilon());
    return rep;
  }
  rep.upper_bound_distance = kk / gap;
  rep.upper_bound_log = g_sum(m, m, k);
  const double upper = std::min(rep.upper_bound_distance, rep.upper_bound_log);
  // k = 1 is the equality case of the lower bound, up to rounding in g_sum
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() * rep.value;
  rep.sandwich_holds = (k == 1 ? rep.lower_bound <= rep.value + slack : rep.lower_bound < rep.value) && rep.value < upper;
  return rep;
}

double mixed_distance_sum(double r, double rho, long k) {
  if (!(r > 0.0) || !(rho > 0.0)) throw Error(ErrorKind::Domain, "mixed_distance_sum needs r, rho > 0");
  if (k < 1) throw Error(ErrorKind::Domain, "mixed_distance_sum needs k >= 1", static_cast<double>(k));
  double acc = 0.0;
  for (long j = 1; j <= k; ++j) {
    const double t = (2.0 * j - 1.0) * std::numbers::pi / k;
    acc += 1.0 / std::hypot(r - rho * std::cos(t), rho * std::sin(t));
  }
  return acc;
}

}  // namespace hartree
