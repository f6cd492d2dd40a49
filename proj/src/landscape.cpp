#include "hartree/landscape.hpp"
#include "hartree/configurations.hpp"
#include "hartree/errors.hpp"
#include "hartree/nelder_mead.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace hartree {

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::Case1: return "case1";
    case TheoremCase::Case2: return "case2";
    case TheoremCase::Case3: return "case3";
    case TheoremCase::None: return "none";
  }
  return "?";
}

namespace {

std::string mark(const std::string& cond, bool ok) { return cond + (ok ? ": satisfied" : ": violated"); }

}  // namespace

CaseVerdict theorem_conditions(const SystemParams& p, const ReducedConstants& c) {
  CaseVerdict v;
  v.beta0_caveat = p.beta[1] > 0.0 || p.beta[2] > 0.0;
  bool base = true;
  auto check = [&](const std::string& cond, bool ok) {
    v.reasons.push_back(mark(cond, ok));
    base = base && ok;
  };

  const auto dom = domain_membership(p.mu[0], p.mu[1], p.beta[0]);
  check("(mu1, mu2, beta12) in domain (branch " + to_string(dom.branch) + ")", dom.member);
  check("mu3 > 0", p.mu[2] > 0.0);
  check("a3 > 0", p.potentials[2].a > 0.0);
  const double a1 = p.potentials[0].a, a2 = p.potentials[1].a;
  switch (c.order) {
    case MOrder::M1Less: check("a1 > 0 (m1 < m2)", a1 > 0.0); break;
    case MOrder::M2Less: check("a2 > 0 (m2 < m1)", a2 > 0.0); break;
    case MOrder::Equal:
      check("a1 alpha^2 + a2 gamma^2 > 0 (m1 = m2)", a1 * c.alpha * c.alpha + a2 * c.gamma * c.gamma > 0.0);
      break;
  }
  if (v.beta0_caveat)
    v.reasons.push_back("beta13 chi(beta13) + beta23 chi(beta23) < beta0: unverified (threshold not quantified)");
  else
    v.reasons.push_back("beta13 chi(beta13) + beta23 chi(beta23) < beta0: satisfied (couplings <= 0)");

  const double rel = std::abs(c.Lambda - 1.0);
  const bool lambda_one = rel <= 1e-9;
  const bool near_one = !lambda_one && rel <= 1e-6;
  const bool finite = std::isfinite(c.Lambda);
  v.reasons.push_back(mark("Lambda != 1 (Lambda = " + std::to_string(c.Lambda) + ")", finite && !lambda_one));

  const double bound = 0.5 * c.d1 * std::min(c.f1_at_d1, c.f2_at_d2);
  const bool c2 = c.D2 >= 0.0 && c.D2 < bound;
  const bool c3 = c.D2 < 0.0 && c.D0 + c.D1 + 2.0 * c.D2 > 0.0;
  auto equal_case = [&]() { return c2 ? TheoremCase::Case2 : (c3 ? TheoremCase::Case3 : TheoremCase::None); };
  if (lambda_one || near_one) {
    v.reasons.push_back(mark("0 <= D2 < (d1/2) min(f1(d1), f2(d2))", c2));
    v.reasons.push_back(mark("D2 < 0 and D0 + D1 + 2 D2 > 0", c3));
  }
  if (!base || !finite) return v;
  if (lambda_one) {
    v.theorem_case = equal_case();
  } else {
    v.theorem_case = TheoremCase::Case1;
    if (near_one) v.dual = {TheoremCase::Case1, equal_case()};
  }
  return v;
}

SearchRegion default_region(const ReducedConstants& c) {
  if (std::isfinite(c.d1) && std::isfinite(c.d2) && c.d1 > 0.0 && c.d2 > 0.0)
    return {c.d1 / 20.0, 20.0 * c.d1, c.d2 / 20.0, 20.0 * c.d2};
  return {0.01, 100.0, 0.01, 100.0};
}

MaximizerResult maximize_f(long k, const ReducedConstants& c, const SearchRegion& g, RingSumModel model) {
  if (k < 2) throw Error(ErrorKind::Domain, "maximize_f needs k >= 2", static_cast<double>(k));
  if (!(g.x_lo > 0.0) || !(g.y_lo > 0.0) || !(g.x_hi > g.x_lo) || !(g.y_hi > g.y_lo))
    throw Error(ErrorKind::Domain, "search region must be a non-empty box in the open positive quadrant");
  using V2 = Eigen::Vector2d;
  auto inside = [&](const V2& p) { return p[0] > g.x_lo && p[0] < g.x_hi && p[1] > g.y_lo && p[1] < g.y_hi; };
  auto f = [&](const V2& p) { return f_xy(p[0], p[1], k, c, model); };
  auto neg = [&](const V2& p) { return inside(p) ? -f(p) : std::numeric_limits<double>::infinity(); };

  V2 center(std::sqrt(g.x_lo * g.x_hi), std::sqrt(g.y_lo * g.y_hi));
  if (std::isfinite(c.d1) && std::isfinite(c.d2) && inside(V2(c.d1, c.d2))) center = V2(c.d1, c.d2);
  std::vector<V2> starts{center};
  for (int a = 0; a < 2; ++a)
    for (double s : {-0.1, 0.1}) {
      V2 q = center;
      q[a] *= 1.0 + s;
      if (inside(q)) starts.push_back(q);
    }

  MaximizerResult best;
  best.f_value = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (const V2& s0 : starts) {
    const auto nm = nelder_mead<double, 2>(neg, s0, 0.05 * s0.maxCoeff());
    if (!nm.converged || !inside(nm.x)) continue;
    ++best.starts_converged;
    if (!any || -nm.value > best.f_value) {
      best.x_star = nm.x[0];
      best.y_star = nm.x[1];
      best.f_value = -nm.value;
      any = true;
    }
  }
  if (!any) return best;

  // Newton polish with central differences.
  V2 x(best.x_star, best.y_star);
  auto grad = [&](const V2& p, double rel) {
    V2 gr;
    for (int a = 0; a < 2; ++a) {
      const double h = rel * p[a];
      V2 lo = p, hi = p;
      lo[a] -= h;
      hi[a] += h;
      gr[a] = (f(hi) - f(lo)) / (2.0 * h);
    }
    return gr;
  };
  for (int it = 0; it < 20; ++it) {
    const V2 gr = grad(x, 1e-5);
    if (gr.cwiseAbs().maxCoeff() < 1e-12) break;
    Eigen::Matrix2d H;
    for (int a = 0; a < 2; ++a) {
      const double h = 1e-4 * x[a];
      V2 lo = x, hi = x;
      lo[a] -= h;
      hi[a] += h;
      H.col(a) = (grad(hi, 1e-5) - grad(lo, 1e-5)) / (2.0 * h);
    }
    H = 0.5 * (H + H.transpose()).eval();
    const V2 step = -H.ldlt().solve(gr);
    const V2 trial = x + step;
    if (!step.allFinite() || !inside(trial) || f(trial) < f(x) - 1e-14 * std::abs(f(x))) break;
    x = trial;
    if (step.norm() < 1e-14 * x.norm()) break;
  }
  best.x_star = x[0];
  best.y_star = x[1];
  best.f_value = f(x);
  const V2 gr = grad(x, 1e-5);
  best.grad_x = gr[0];
  best.grad_y = gr[1];
  best.interior_margin = std::min({x[0] - g.x_lo, g.x_hi - x[0], x[1] - g.y_lo, g.y_hi - x[1]});
  best.converged = gr.cwiseAbs().maxCoeff() < 1e-8 && best.interior_margin > 0.0;
  return best;
}

PeakRadii peak_radii(long k, const ReducedConstants& c, const MaximizerResult& res, double C1, double C2) {
  PeakRadii p;
  p.scale = radius_scale(k, c.m);
  p.r_star = res.x_star * p.scale;
  p.rho_star = res.y_star * p.scale;
  if (!(C1 > 0.0)) {
    C1 = 0.5 * std::min(res.x_star, res.y_star);
    C2 = 2.0 * std::max(res.x_star, res.y_star);
  }
  p.C1 = C1;
  p.C2 = C2;
  const auto [lo, hi] = s_k_window(static_cast<double>(k), c.m, C1, C2);
  p.window_lo = lo;
  p.window_hi = hi;
  p.in_window = p.r_star >= lo && p.r_star <= hi && p.rho_star >= lo && p.rho_star <= hi;
  return p;
}

LandscapeGrid landscape_scan(long k, const ReducedConstants& c, const ScanSpec& s, RingSumModel model) {
  if (s.nx < 2 || s.ny < 2) throw Error(ErrorKind::Domain, "scan needs at least 2 points per axis");
  if (!(s.region.x_lo > 0.0) || !(s.region.y_lo > 0.0) || !(s.region.x_hi > s.region.x_lo) ||
      !(s.region.y_hi > s.region.y_lo))
    throw Error(ErrorKind::Domain, "scan region must be a non-empty box in the open positive quadrant");
  LandscapeGrid out;
  out.x = Eigen::VectorXd::LinSpaced(s.nx, s.region.x_lo, s.region.x_hi);
  out.y = Eigen::VectorXd::LinSpaced(s.ny, s.region.y_lo, s.region.y_hi);
  out.f.resize(s.nx, s.ny);
  for (int i = 0; i < s.nx; ++i)
    for (int j = 0; j < s.ny; ++j) out.f(i, j) = f_xy(out.x[i], out.y[j], k, c, model);
  return out;
}

}  // namespace hartree
