#include "hartree/reduced_model.hpp"
#include "hartree/errors.hpp"
#include "hartree/ring_kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hartree {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double pi = std::numbers::pi;

double effective_m(const PotentialSpec& p) {
  return p.constant() ? std::numeric_limits<double>::infinity() : p.m;
}

double ring_factor(long k, RingSumModel model) {
  return model == RingSumModel::Exact ? self_ring_factor(k) : 1.0;
}

}  // namespace

std::string to_string(MOrder o) {
  switch (o) {
    case MOrder::M1Less: return "m1<m2";
    case MOrder::M2Less: return "m2<m1";
    case MOrder::Equal: return "m1=m2";
  }
  return "?";
}

ReducedConstants compute_constants(const SystemParams& params, const GroundStateStats& gs) {
  params.validate();
  if (gs.degenerate || !(gs.M_w > 0.0) || !(gs.P_w > 0.0))
    throw Error(ErrorKind::DegenerateInput, "ground-state statistics are degenerate");
  ReducedConstants c;
  c.M_w = gs.M_w;
  c.K_w = gs.K_w;
  c.P_w = gs.P_w;
  c.C_w = gs.M_w * gs.M_w;

  const double mu1 = params.mu[0], mu2 = params.mu[1], mu3 = params.mu[2];
  const double b12 = params.beta[0], b13 = params.beta[1], b23 = params.beta[2];
  const double lam = params.lambda;
  const auto sync = sync_coefficients(mu1, mu2, b12);
  c.alpha = sync.alpha;
  c.gamma = sync.gamma;
  const double a2 = c.alpha * c.alpha, g2 = c.gamma * c.gamma;

  c.A0 = 0.25 * (a2 + g2) * c.P_w;
  c.A_tilde = std::pow(lam, 1.5) * c.P_w / (4.0 * mu3);
  c.B1 = 0.5 * a2 * c.M_w;
  c.B2 = 0.5 * g2 * c.M_w;
  c.B3 = 0.5 * std::sqrt(lam) / mu3 * c.M_w;
  c.D0 = 0.25 * (mu1 * a2 * a2 + mu2 * g2 * g2 + 2.0 * b12 * a2 * g2) * c.C_w / pi;
  c.D1 = 0.25 * (lam / mu3) * c.C_w / pi;
  c.D2 = 0.5 * (b13 * a2 + b23 * g2) * std::sqrt(lam) / mu3 * c.C_w / pi;

  const auto& V = params.potentials;
  const double m1 = effective_m(V[0]), m2 = effective_m(V[1]);
  c.order = m1 < m2 ? MOrder::M1Less : (m2 < m1 ? MOrder::M2Less : MOrder::Equal);
  double weight = 0.0;  // a1 alpha^2, a2 gamma^2 or their sum
  switch (c.order) {
    case MOrder::M1Less:
      c.lead12 = V[0].a * c.B1;
      weight = V[0].a * a2;
      break;
    case MOrder::M2Less:
      c.lead12 = V[1].a * c.B2;
      weight = V[1].a * g2;
      break;
    case MOrder::Equal:
      c.lead12 = V[0].a * c.B1 + V[1].a * c.B2;
      weight = V[0].a * a2 + V[1].a * g2;
      break;
  }
  c.lead3 = V[2].a * c.B3;
  c.Lambda = V[2].a * (a2 + g2) / (weight * std::sqrt(lam));
  c.m = params.leading_m();

  const double m = c.m;
  if (std::isnan(m)) {
    c.valid_for_theorem = false;
    c.notes.push_back("all potentials constant: no leading exponent m");
    c.d1 = c.d2 = c.f1_at_d1 = c.f2_at_d2 = nan;
    return c;
  }
  const double e = 1.0 / (1.0 - m);
  if (c.lead12 > 0.0) {
    c.d1 = std::pow(c.D0 / (c.lead12 * m), e);
    c.f1_at_d1 = (1.0 - m) * std::pow(c.lead12, e) * std::pow(m / c.D0, m * e);
  } else {
    c.valid_for_theorem = false;
    c.notes.push_back("leading a-coefficient of components 1-2 is not positive (" + to_string(c.order) +
                      "): d1 undefined");
    c.d1 = c.f1_at_d1 = nan;
  }
  if (c.lead3 > 0.0) {
    c.d2 = std::pow(c.D1 / (c.lead3 * m), e);
    c.f2_at_d2 = (1.0 - m) * std::pow(c.lead3, e) * std::pow(m / c.D1, m * e);
  } else {
    c.valid_for_theorem = false;
    c.notes.push_back("a3 is not positive: d2 undefined");
    c.d2 = c.f2_at_d2 = nan;
  }
  return c;
}

double f1(double x, const ReducedConstants& c, long k, RingSumModel model) {
  return c.lead12 / std::pow(x, c.m) - ring_factor(k, model) * c.D0 / x;
}

double f2(double y, const ReducedConstants& c, long k, RingSumModel model) {
  return c.lead3 / std::pow(y, c.m) - ring_factor(k, model) * c.D1 / y;
}

double f_xy(double x, double y, long k, const ReducedConstants& c, RingSumModel model) {
  if (k < 2) throw Error(ErrorKind::Domain, "f_xy needs k >= 2", static_cast<double>(k));
  const double kk = static_cast<double>(k);
  double v = f1(x, c, k, model) + f2(y, c, k, model);
  if (c.D2 != 0.0) v -= pi * c.D2 * g_sum(x, y, k) / (kk * std::log(kk));
  return v;
}

double radius_scale(long k, double m) {
  const double kk = static_cast<double>(k);
  return std::pow(kk * std::log(kk), 1.0 / (1.0 - m));
}

double F_hat(double x, double y, long k, const ReducedConstants& c, RingSumModel model) {
  const double kk = static_cast<double>(k);
  const double scale = std::pow(kk * std::log(kk), -c.m / (1.0 - c.m));
  return kk * (c.A0 + c.A_tilde + scale * f_xy(x, y, k, c, model));
}

double asymptotic_energy(double r, double rho, long k, const ReducedConstants& c, const SystemParams& params,
                         RingSumModel model) {
  if (!(r > 0.0) || !(rho > 0.0)) throw Error(ErrorKind::Domain, "asymptotic_energy needs r, rho > 0");
  if (k < 1) throw Error(ErrorKind::Domain, "asymptotic_energy needs k >= 1", static_cast<double>(k));
  const double kk = static_cast<double>(k);
  const auto& V = params.potentials;
  const double S = model == RingSumModel::Exact ? pi * self_ring_sum(k) : kk * std::log(kk);
  double per = c.A0 + c.A_tilde;
  if (!V[0].constant()) per += V[0].a * c.B1 / std::pow(r, V[0].m);
  if (!V[1].constant()) per += V[1].a * c.B2 / std::pow(r, V[1].m);
  if (!V[2].constant()) per += V[2].a * c.B3 / std::pow(rho, V[2].m);
  per -= c.D0 * S / r + c.D1 * S / rho;
  if (c.D2 != 0.0) per -= pi * c.D2 * g_sum(r, rho, k);
  return kk * per;
}

}  // namespace hartree
