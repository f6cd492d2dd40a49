#include "hartree/newtonian.hpp"
#include "hartree/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hartree {

using Eigen::Index;
using Eigen::VectorXd;

namespace {

// Cumulative trapezoid: out[i] = int_0^{r_i} f.
VectorXd cumulative(const VectorXd& f, double h) {
  VectorXd out(f.size());
  out[0] = 0.0;
  for (Index i = 1; i < f.size(); ++i) out[i] = out[i - 1] + 0.5 * h * (f[i - 1] + f[i]);
  return out;
}

}  // namespace

double tail_mass_fraction(const RadialProfile& u) {
  const VectorXd r = u.grid.nodes();
  const VectorXd dens = (u.values.array() * r.array()).square().matrix();
  const VectorXd cum = cumulative(dens, u.grid.spacing());
  const double total = cum[cum.size() - 1];
  if (total <= 0.0) return 0.0;
  const Index i0 = static_cast<Index>(std::floor(0.9 * u.grid.n_points));
  return (total - cum[i0]) / total;
}

RadialProfile radial_potential(const RadialProfile& u) {
  if (!u.values.allFinite()) throw Error(ErrorKind::Numeric, "radial_potential: non-finite input");
  const double h = u.grid.spacing();
  const double four_pi = 4.0 * std::numbers::pi;
  const VectorXd r = u.grid.nodes();
  const VectorXd v2 = (u.values.array() * r.array()).square().matrix();  // s^2 u^2
  const VectorXd su2 = (u.values.array().square() * r.array()).matrix();  // s u^2

  const VectorXd inner = cumulative(v2, h);
  const VectorXd outer_cum = cumulative(su2, h);
  const double outer_total = outer_cum[outer_cum.size() - 1];

  VectorXd phi(u.values.size());
  phi[0] = four_pi * outer_total;
  for (Index i = 1; i < phi.size(); ++i) phi[i] = four_pi * (inner[i] / r[i] + (outer_total - outer_cum[i]));

  RadialProfile out(u.grid, std::move(phi), FarField::Coulomb);
  const double tail = tail_mass_fraction(u);
  if (tail > 1e-6) out.warnings.push_back("tail mass fraction " + std::to_string(tail) + " exceeds 1e-6; enlarge r_max");
  return out;
}

namespace {

// Canonical order so that the bipolar evaluation is exactly symmetric in its
// arguments: the compactly supported, narrower profile is integrated outside.
bool outer_first(const RadialProfile& f, const RadialProfile& g) {
  const double sf = f.support_radius(), sg = g.support_radius();
  if (sf != sg) return sf < sg;
  if (f.grid.n_points != g.grid.n_points) return f.grid.n_points < g.grid.n_points;
  return !std::lexicographical_compare(g.values.begin(), g.values.end(), f.values.begin(), f.values.end());
}

// G(t) = int_0^t g(tau) tau dtau for any t >= 0.
class RadialMoment {
 public:
  explicit RadialMoment(const RadialProfile& g) : g_(g), h_(g.grid.spacing()) {
    const VectorXd r = g.grid.nodes();
    cum_ = cumulative(g.values.cwiseProduct(r), h_);
    if (g.far_field == FarField::Coulomb) coulomb_ = g.values[g.values.size() - 1] * g.grid.r_max;
  }

  double operator()(double t) const {
    const double rmax = g_.grid.r_max;
    if (t >= rmax) return cum_[cum_.size() - 1] + coulomb_ * (t - rmax);
    const Index i = static_cast<Index>(std::floor(t / h_));
    const double ti = g_.grid.node(i);
    if (t == ti) return cum_[i];
    // Simpson on the partial cell with the interpolant
    const double tm = 0.5 * (ti + t);
    return cum_[i] + (t - ti) / 6.0 * (g_.values[i] * ti + 4.0 * g_(tm) * tm + g_(t) * t);
  }

 private:
  const RadialProfile& g_;
  double h_;
  VectorXd cum_;
  double coulomb_ = 0.0;
};

}  // namespace

double two_center_integral(const RadialProfile& f_in, const RadialProfile& g_in, double d) {
  if (!(d >= 0.0)) throw Error(ErrorKind::Domain, "two_center_integral: negative distance", d);
  if (f_in.far_field == FarField::Coulomb && g_in.far_field == FarField::Coulomb)
    throw Error(ErrorKind::Domain, "two_center_integral: both profiles have Coulomb tails");
  const bool keep = outer_first(f_in, g_in);
  const RadialProfile& f = keep ? f_in : g_in;
  const RadialProfile& g = keep ? g_in : f_in;

  const double h = f.grid.spacing();
  const VectorXd s = f.grid.nodes();
  const Index n = s.size();
  VectorXd integrand(n);
  if (d == 0.0) {
    for (Index i = 0; i < n; ++i) integrand[i] = f.values[i] * g(s[i]) * s[i] * s[i];
    return 4.0 * std::numbers::pi * h * (integrand.sum() - 0.5 * (integrand[0] + integrand[n - 1]));
  }
  const RadialMoment G(g);
  for (Index i = 0; i < n; ++i)
    integrand[i] = f.values[i] == 0.0 ? 0.0 : f.values[i] * s[i] * (G(s[i] + d) - G(std::abs(s[i] - d)));
  const double integral = h * (integrand.sum() - 0.5 * (integrand[0] + integrand[n - 1]));
  return 2.0 * std::numbers::pi / d * integral;
}

}  // namespace hartree
