#include "hartree/profiles.hpp"
#include "hartree/errors.hpp"
#include "hartree/newtonian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hartree {

double SystemParams::coupling(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2) throw Error(ErrorKind::Domain, "coupling needs i != j in {0,1,2}");
  const int s = i + j;  // 1 -> (0,1), 2 -> (0,2), 3 -> (1,2)
  return beta[s - 1];
}

double SystemParams::leading_m() const {
  double m12 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 2; ++i)
    if (!potentials[i].constant()) m12 = std::min(m12, potentials[i].m);
  if (std::isfinite(m12)) return m12;
  if (!potentials[2].constant()) return potentials[2].m;
  return std::numeric_limits<double>::quiet_NaN();
}

void SystemParams::validate() const {
  auto fail = [](const std::string& what, double v = std::numeric_limits<double>::quiet_NaN()) {
    throw Error(ErrorKind::Validation, what, v);
  };
  if (!mu.allFinite() || !beta.allFinite() || !std::isfinite(lambda)) fail("parameters must be finite");
  if (!(mu[2] > 0.0)) fail("mu3 must be positive", mu[2]);
  if (!(lambda > 0.0)) fail("lambda must be positive", lambda);
  for (int i = 0; i < 3; ++i) {
    const auto& p = potentials[i];
    const double want = i < 2 ? 1.0 : lambda;
    const std::string id = "V" + std::to_string(i + 1);
    if (std::abs(p.lambda - want) > 1e-14 * want) fail(id + ": lambda_i must be 1, 1, lambda", p.lambda);
    if (!p.constant() && !(p.m > 0.0)) fail(id + ": m must be positive", p.m);
    if (!(p.theta > 0.0)) fail(id + ": theta must be positive", p.theta);
    if (!(p.infimum() > 0.0)) fail(id + ": inf V must be positive", p.infimum());
  }
  const double m = leading_m();
  if (std::isnan(m)) return;
  if (!potentials[2].constant()) {
    bool has12 = !potentials[0].constant() || !potentials[1].constant();
    if (has12 && std::abs(potentials[2].m - m) > 1e-12) fail("min(m1, m2) must equal m3", potentials[2].m);
  }
  if (m < 0.5 || m >= 1.0) fail("leading exponent m must lie in [1/2, 1)", m);
}

SyncCoefficients sync_coefficients(double mu1, double mu2, double beta12) {
  const double det = mu1 * mu2 - beta12 * beta12;
  const double scale = std::max({std::abs(mu1 * mu2), beta12 * beta12, 1e-300});
  if (std::abs(det) <= 1e-14 * scale) throw Error(ErrorKind::Singularity, "mu1 mu2 = beta12^2", det);
  const double a2 = (mu2 - beta12) / det;
  const double g2 = (mu1 - beta12) / det;
  if (!(a2 > 0.0) || !(g2 > 0.0))
    throw Error(ErrorKind::OutsideRegime, "no positive synchronized pair", std::min(a2, g2));
  SyncCoefficients s{std::sqrt(a2), std::sqrt(g2), 0.0};
  s.system_residual = std::max(std::abs(mu1 * a2 + beta12 * g2 - 1.0), std::abs(beta12 * a2 + mu2 * g2 - 1.0));
  return s;
}

std::string to_string(DomainBranch b) {
  switch (b) {
    case DomainBranch::I: return "I";
    case DomainBranch::II: return "II";
    case DomainBranch::III: return "III";
    case DomainBranch::Outside: return "outside";
  }
  return "?";
}

DomainVerdict domain_membership(double mu, double nu, double beta) {
  DomainVerdict v;
  const double lo = std::min(mu, nu), hi = std::max(mu, nu);
  if (mu > 0.0 && nu > 0.0) {
    const bool in = (beta > -std::sqrt(mu * nu) && beta < 0.0) || (beta > 0.0 && beta < lo) || beta > hi;
    if (in) {
      v.member = true;
      v.branch = DomainBranch::I;
      if (beta < 0.0)
        v.caveat = "beta12 in (-sqrt(mu nu), 0): membership excludes an unknown discrete sequence accumulating at "
                   "-sqrt(mu nu); not checked";
    }
  } else if (mu < 0.0 && nu < 0.0) {
    if (beta > std::sqrt(mu * nu)) {
      v.member = true;
      v.branch = DomainBranch::II;
    }
  } else if (beta > hi) {
    v.member = true;
    v.branch = DomainBranch::III;
  }
  return v;
}

RadialProfile scaled_bump(const RadialProfile& w, double lambda, double mu3) {
  if (!(lambda > 0.0) || !(mu3 > 0.0)) throw Error(ErrorKind::Domain, "scaled_bump needs lambda, mu3 > 0");
  const double s = std::sqrt(lambda), c = lambda / std::sqrt(mu3);
  const double r_max = w.grid.r_max;
  if (s > 1.0) {
    // Nodes mapped past r_max read zero; require the outer 5% to be negligible.
    const auto n = w.values.size();
    const auto tail = static_cast<Eigen::Index>(0.95 * (n - 1));
    const double edge = w.values.tail(n - tail).cwiseAbs().maxCoeff();
    if (w.far_field != FarField::Zero || edge > 1e-10 * w.max_abs())
      throw Error(ErrorKind::Range, "scaled_bump resamples beyond the grid where w is not negligible", s * r_max);
  }
  RadialProfile out = sample_profile(w.grid, [&](double r) { return c * w(s * r); }, w.far_field);
  out.tail_rate = w.tail_rate * s;
  out.tail_amplitude = w.tail_amplitude * c / s;
  return out;
}

double radial_equation_residual(const RadialProfile& p, double lambda, double mu) {
  const RadialProfile phi = radial_potential(p);
  const double h = p.grid.spacing();
  const auto n = p.values.size();
  const auto stop = static_cast<Eigen::Index>(0.7 * (n - 1));
  double res = 0.0;
  for (Eigen::Index i = 1; i < stop; ++i) {
    const double r = p.grid.node(i);
    const double vm = (r - h) * p.values[i - 1], v0 = r * p.values[i], vp = (r + h) * p.values[i + 1];
    const double lap = (vp - 2.0 * v0 + vm) / (h * h) / r;
    res = std::max(res, std::abs(-lap + lambda * p.values[i] - mu * phi.values[i] * p.values[i]));
  }
  const double ref = lambda * p.max_abs();
  return ref > 0.0 ? res / ref : res;
}

}  // namespace hartree
