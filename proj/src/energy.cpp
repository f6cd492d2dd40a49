#include "hartree/energy.hpp"
#include "hartree/errors.hpp"
#include "hartree/ground_state.hpp"
#include "hartree/newtonian.hpp"
#include "hartree/reduced_model.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>

namespace hartree {

using Eigen::Vector3d;

void check_envelope(int k, const GridSpec& g, bool allow_large) {
  if (allow_large) return;
  if (k > 8) throw Error(ErrorKind::Validation, "k > 8 exceeds the default envelope (use --allow-large)", k);
  if (g.box_half_width > 40.0)
    throw Error(ErrorKind::Validation, "box half width > 40 exceeds the default envelope (use --allow-large)",
                g.box_half_width);
  if (g.n_per_axis > 192)
    throw Error(ErrorKind::Validation, "n_per_axis > 192 exceeds the default envelope (use --allow-large)",
                g.n_per_axis);
}

namespace {

RadialProfile squared(const RadialProfile& p) {
  return sample_profile(p.grid, [&](double r) { return p(r) * p(r); });
}

// c * p(|x - center|) added into f for nodes within reach of the profile.
void add_bump(Field3D& f, const Vector3d& center, const RadialProfile& p, double c) {
  const double reach = p.grid.r_max;
  const int n = f.n_per_axis;
  const double h = f.spacing();
  int lo[3], hi[3];
  for (int a = 0; a < 3; ++a) {
    const double base = f.center[a] - f.box_half_width;
    lo[a] = std::max(0, static_cast<int>(std::floor((center[a] - reach - base) / h)));
    hi[a] = std::min(n - 1, static_cast<int>(std::ceil((center[a] + reach - base) / h)));
  }
  for (int k = lo[2]; k <= hi[2]; ++k)
    for (int j = lo[1]; j <= hi[1]; ++j)
      for (int i = lo[0]; i <= hi[0]; ++i) {
        const double r = (f.node(i, j, k) - center).norm();
        if (r < reach) f(i, j, k) += c * p(r);
      }
}

Field3D square(const Field3D& u) {
  Field3D s = u;
  s.values = u.values.array().square().matrix();
  return s;
}

// Sum of (1/h^2) |forward differences|^2 h^3 over all axes.
double gradient_energy(const Field3D& u) {
  const int n = u.n_per_axis;
  const double h = u.spacing();
  double acc = 0.0;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const double c = u(i, j, k);
        const double dx = (i + 1 < n ? u(i + 1, j, k) : 0.0) - c;
        const double dy = (j + 1 < n ? u(i, j + 1, k) : 0.0) - c;
        const double dz = (k + 1 < n ? u(i, j, k + 1) : 0.0) - c;
        acc += dx * dx + dy * dy + dz * dz;
      }
  return acc * h;
}

double potential_energy(const Field3D& u, const PotentialSpec& V) {
  const int n = u.n_per_axis;
  double acc = 0.0;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const double v = u(i, j, k);
        if (v != 0.0) acc += V.value(u.node(i, j, k).norm()) * v * v;
      }
  return acc * u.cell_volume();
}

double weighted(const Field3D& phi, const Field3D& u) {
  return phi.cell_volume() * (phi.values.array() * u.values.array().square()).sum();
}

const Field3D& component(const AnsatzFields& f, int i) { return i == 0 ? f.u1 : (i == 1 ? f.u2 : f.u3); }

}  // namespace

BumpSet make_bumps(const RadialProfile& w, const SystemParams& params) {
  params.validate();
  BumpSet b;
  b.w = w;
  b.W = scaled_bump(w, params.lambda, params.mu[2]);
  b.phi_w = radial_potential(w);
  b.phi_W = radial_potential(b.W);
  const auto s = sync_coefficients(params.mu[0], params.mu[1], params.beta[0]);
  b.alpha = s.alpha;
  b.gamma = s.gamma;
  b.P_w = ground_state_stats(w).P_w;
  return b;
}

AnsatzFields assemble_ansatz(const PeakConfig& config, const SystemParams& params, const BumpSet& bumps,
                             const GridSpec& grid) {
  const double L = grid.box_half_width;
  auto check = [&](const Eigen::Matrix3Xd& centers) {
    for (Eigen::Index j = 0; j < centers.cols(); ++j)
      if (L - centers.col(j).cwiseAbs().maxCoeff() < 10.0)
        throw Error(ErrorKind::Geometry, "peak closer than 10 to the box boundary",
                    L - centers.col(j).cwiseAbs().maxCoeff());
  };
  check(config.centers_inner);
  check(config.centers_outer);
  AnsatzFields f{Field3D(L, grid.n_per_axis), Field3D(L, grid.n_per_axis), Field3D(L, grid.n_per_axis), config,
                 params};
  f.u1.validate();
  for (int j = 0; j < config.k; ++j) {
    add_bump(f.u1, config.centers_inner.col(j), bumps.w, config.signs_inner[j] * bumps.alpha);
    add_bump(f.u2, config.centers_inner.col(j), bumps.w, config.signs_inner[j] * bumps.gamma);
    add_bump(f.u3, config.centers_outer.col(j), bumps.W, config.signs_outer[j]);
  }
  return f;
}

FieldPotentials field_potentials(const AnsatzFields& f, FreeSpaceConvolver& conv) {
  FieldPotentials p;
  for (int i = 0; i < 3; ++i) {
    const Field3D& u = component(f, i);
    if (u.max_abs() > 0.0) p.phi[i] = conv.potential(square(u));
  }
  return p;
}

EnergyBreakdown full_energy(const AnsatzFields& f) {
  FreeSpaceConvolver conv(f.u1.n_per_axis, f.u1.spacing());
  return full_energy(f, field_potentials(f, conv));
}

EnergyBreakdown full_energy(const AnsatzFields& f, const FieldPotentials& phi) {
  EnergyBreakdown e;
  const auto& P = f.params;
  for (int i = 0; i < 3; ++i) {
    const Field3D& u = component(f, i);
    if (!phi.phi[i]) continue;
    e.kinetic_and_potential[i] = 0.5 * (gradient_energy(u) + potential_energy(u, P.potentials[i]));
    e.self_interaction[i] = -0.25 * P.mu[i] * weighted(*phi.phi[i], u);
  }
  auto cross = [&](int i, int j) {
    if (!phi.phi[i] || !phi.phi[j]) return 0.0;
    return -0.5 * P.coupling(i, j) * weighted(*phi.phi[j], component(f, i));
  };
  e.cross_12 = cross(0, 1);
  e.cross_13 = cross(0, 2);
  e.cross_23 = cross(1, 2);
  e.total = e.cross_12 + e.cross_13 + e.cross_23;
  for (int i = 0; i < 3; ++i) e.total += e.kinetic_and_potential[i] + e.self_interaction[i];
  return e;
}

GridInteraction grid_interaction_energy(const AnsatzFields& f, const BumpSet& bumps, int local_n) {
  GridInteraction out;
  out.full = full_energy(f);
  const double h = f.u1.spacing(), L = f.u1.box_half_width;
  const double local_L = 0.5 * local_n * h;
  FreeSpaceConvolver conv(local_n, h);
  auto isolated = [&](const Vector3d& c, int ring, double sign) {
    Vector3d lc;
    for (int a = 0; a < 3; ++a) {
      const long i0 = std::lround((c[a] - f.u1.center[a] + L) / h) - local_n / 2;
      lc[a] = f.u1.center[a] - L + (static_cast<double>(i0) + local_n / 2) * h;
    }
    AnsatzFields g{Field3D(local_L, local_n, lc), Field3D(local_L, local_n, lc), Field3D(local_L, local_n, lc),
                   f.config, f.params};
    if (ring == 0) {
      add_bump(g.u1, c, bumps.w, sign * bumps.alpha);
      add_bump(g.u2, c, bumps.w, sign * bumps.gamma);
    } else {
      add_bump(g.u3, c, bumps.W, sign);
    }
    return full_energy(g, field_potentials(g, conv)).total;
  };
  const PeakConfig& cfg = f.config;
  for (int j = 0; j < cfg.k; ++j) {
    if (f.u1.max_abs() > 0.0 || f.u2.max_abs() > 0.0)
      out.isolated_sum += isolated(cfg.centers_inner.col(j), 0, cfg.signs_inner[j]);
    if (f.u3.max_abs() > 0.0) out.isolated_sum += isolated(cfg.centers_outer.col(j), 1, cfg.signs_outer[j]);
  }
  out.interaction = out.full.total - out.isolated_sum;
  return out;
}

PairwiseEnergy pairwise_energy(const PeakConfig& cfg, const SystemParams& params, const BumpSet& b) {
  PairwiseEnergy e;
  const double k = cfg.k;
  const double mu3 = params.mu[2], lam = params.lambda;
  const double a2 = b.alpha * b.alpha, g2 = b.gamma * b.gamma;
  e.self = k * (0.25 * (a2 + g2) * b.P_w + std::pow(lam, 1.5) * b.P_w / (4.0 * mu3));

  const RadialProfile w2 = squared(b.w), W2 = squared(b.W);
  auto excess_term = [&](const PotentialSpec& V, const RadialProfile& dens, double d) {
    if (V.constant()) return 0.0;
    const double h = b.w.grid.spacing();
    RadialGrid g{d + dens.grid.r_max + 1.0, 0};
    g.n_points = static_cast<int>(std::ceil(g.r_max / h));
    g.r_max = g.n_points * h;
    const RadialProfile ex = sample_profile(g, [&](double r) { return V.excess(r); });
    return two_center_integral(dens, ex, d);
  };
  const auto& V = params.potentials;
  e.potential = k * (0.5 * a2 * excess_term(V[0], w2, cfg.r) + 0.5 * g2 * excess_term(V[1], w2, cfg.r) +
                     0.5 * excess_term(V[2], W2, cfg.rho));

  const Vector3d x1 = cfg.centers_inner.col(0);
  for (int j = 1; j < cfg.k; ++j) {
    const double d = (cfg.centers_inner.col(j) - x1).norm();
    e.ring12 -= 0.25 * (a2 + g2) * two_center_integral(b.phi_w, w2, d);
    e.overlap_error_bar += (a2 + g2) * b.P_w * std::exp(-0.5 * d);
    const double dy = (cfg.centers_outer.col(j) - cfg.centers_outer.col(0)).norm();
    e.ring3 -= 0.25 * mu3 * two_center_integral(b.phi_W, W2, dy);
    e.overlap_error_bar += std::pow(lam, 1.5) / mu3 * b.P_w * std::exp(-0.5 * std::sqrt(lam) * dy);
  }
  const double coupling = params.beta[1] * a2 + params.beta[2] * g2;
  if (coupling != 0.0)
    for (int j = 0; j < cfg.k; ++j)
      e.cross -= 0.5 * coupling * two_center_integral(b.phi_W, w2, (cfg.centers_outer.col(j) - x1).norm());
  e.ring12 *= k;
  e.ring3 *= k;
  e.cross *= k;
  e.overlap_error_bar *= k;
  e.total = e.self + e.potential + e.ring12 + e.ring3 + e.cross;
  return e;
}

namespace {

// 7-point Laplacian at (i, j, k), zero outside the box.
double laplacian(const Field3D& u, int i, int j, int k) {
  const int n = u.n_per_axis;
  auto at = [&](int a, int b, int c) {
    return (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n) ? 0.0 : u(a, b, c);
  };
  const double h = u.spacing();
  return (at(i + 1, j, k) + at(i - 1, j, k) + at(i, j + 1, k) + at(i, j - 1, k) + at(i, j, k + 1) +
          at(i, j, k - 1) - 6.0 * u(i, j, k)) /
         (h * h);
}

}  // namespace

Eigen::Vector3d pde_residual(const AnsatzFields& f) {
  FreeSpaceConvolver conv(f.u1.n_per_axis, f.u1.spacing());
  return pde_residual(f, field_potentials(f, conv));
}

Eigen::Vector3d pde_residual(const AnsatzFields& f, const FieldPotentials& phi) {
  Eigen::Vector3d out = Eigen::Vector3d::Zero();
  const auto& P = f.params;
  const int n = f.u1.n_per_axis;
  for (int c = 0; c < 3; ++c) {
    const Field3D& u = component(f, c);
    if (!phi.phi[c]) continue;
    double acc = 0.0;
    for (int k = 1; k < n - 1; ++k)
      for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) {
          double coupling = P.mu[c] * (*phi.phi[c])(i, j, k);
          for (int d = 0; d < 3; ++d)
            if (d != c && phi.phi[d]) coupling += P.coupling(c, d) * (*phi.phi[d])(i, j, k);
          const double v = u(i, j, k);
          const double res =
              -laplacian(u, i, j, k) + (P.potentials[c].value(u.node(i, j, k).norm()) - coupling) * v;
          acc += res * res;
        }
    out[c] = std::sqrt(acc * u.cell_volume());
  }
  return out;
}

Eigen::Vector3d patch_residual(const PeakConfig& cfg, const SystemParams& P, const BumpSet& b,
                               const PatchSpec& patch) {
  Eigen::Vector3d out;
  const double coef[3] = {b.alpha, b.gamma, 1.0};
  for (int c = 0; c < 3; ++c) {
    const Vector3d center = c < 2 ? Vector3d(cfg.centers_inner.col(0)) : Vector3d(cfg.centers_outer.col(0));
    Field3D u(patch.half_width, patch.n_per_axis, center);
    const auto& centers = c < 2 ? cfg.centers_inner : cfg.centers_outer;
    const auto& signs = c < 2 ? cfg.signs_inner : cfg.signs_outer;
    const RadialProfile& prof = c < 2 ? b.w : b.W;
    for (int j = 0; j < cfg.k; ++j) add_bump(u, centers.col(j), prof, signs[j] * coef[c]);

    // phi_{u_d}(x) = sum_j coef_d^2 phi_unit(|x - center_j|)
    auto potential = [&](int d, const Vector3d& x) {
      const auto& cs = d < 2 ? cfg.centers_inner : cfg.centers_outer;
      const RadialProfile& phi = d < 2 ? b.phi_w : b.phi_W;
      double acc = 0.0;
      for (int j = 0; j < cfg.k; ++j) acc += phi((x - cs.col(j)).norm());
      return coef[d] * coef[d] * acc;
    };
    const int n = patch.n_per_axis;
    double acc = 0.0;
    for (int k = 1; k < n - 1; ++k)
      for (int j = 1; j < n - 1; ++j)
        for (int i = 1; i < n - 1; ++i) {
          const Vector3d x = u.node(i, j, k);
          if ((x - center).norm() > patch.ball_radius) continue;
          double coupling = P.mu[c] * potential(c, x);
          for (int d = 0; d < 3; ++d)
            if (d != c && P.coupling(c, d) != 0.0) coupling += P.coupling(c, d) * potential(d, x);
          const double v = u(i, j, k);
          const double res = -laplacian(u, i, j, k) + (P.potentials[c].value(x.norm()) - coupling) * v;
          acc += res * res;
        }
    out[c] = std::sqrt(acc * u.cell_volume());
  }
  return out;
}

ResidualStudy residual_scaling_study(const std::vector<int>& ks, const RadiusRule& rule, const SystemParams& params,
                                     const BumpSet& bumps, const PatchSpec& patch, Variant variant) {
  ResidualStudy st;
  double m = params.leading_m();
  const bool fallback = std::isnan(m);
  if (fallback) m = 0.5;
  for (int k : ks) {
    if (k < 2) throw Error(ErrorKind::Domain, "residual study needs k >= 2", k);
    const double s = radius_scale(k, m);
    ResidualRow row;
    row.k = k;
    row.r = rule.C_r * s;
    row.rho = rule.C_rho * s;
    const PeakConfig cfg = build_config(k, row.r, row.rho, variant);
    double dmin = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
      dmin = std::min(dmin, (cfg.centers_outer.col(j) - cfg.centers_inner.col(0)).norm());
      if (j > 0) dmin = std::min(dmin, (cfg.centers_inner.col(j) - cfg.centers_inner.col(0)).norm());
    }
    PatchSpec ps = patch;
    ps.ball_radius = std::min(patch.ball_radius, 0.5 * dmin);
    row.residual = patch_residual(cfg, params, bumps, ps).norm();
    const double h = 2.0 * ps.half_width / ps.n_per_axis;
    if (ps.ball_radius < 8.0) {
      row.under_resolved = true;
      row.note = "neighbouring peaks within 16 units";
    } else if (h > 0.5) {
      row.under_resolved = true;
      row.note = "patch spacing above 0.5";
    }
    if (fallback) row.note += (row.note.empty() ? "" : "; ") + std::string("all potentials constant, m = 1/2 used");
    st.rows.push_back(row);
  }
  if (st.rows.size() >= 2) {
    Eigen::MatrixXd A(st.rows.size(), 2);
    Eigen::VectorXd y(st.rows.size());
    for (size_t i = 0; i < st.rows.size(); ++i) {
      A(i, 0) = std::log(static_cast<double>(st.rows[i].k));
      A(i, 1) = 1.0;
      y[i] = std::log(st.rows[i].residual);
    }
    st.fitted_exponent = A.colPivHouseholderQr().solve(y)[0];
  }
  return st;
}

}  // namespace hartree
