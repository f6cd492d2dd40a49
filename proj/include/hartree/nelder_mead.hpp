#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <vector>

namespace hartree {

struct NelderMeadOptions {
  double diameter_tolerance = 1e-10;
  int max_evaluations = 20000;
};

template <typename Scalar, int Dim>
struct NelderMeadResult {
  Eigen::Matrix<Scalar, Dim, 1> x;
  Scalar value;
  Scalar diameter;
  int evaluations = 0;
  bool converged = false;
};

/// Minimizes f from x0 with an axis-aligned starting simplex of edge `step`.
/// Stops when the largest vertex distance from the best vertex falls below
/// the tolerance. f may return +inf to reject a point.
template <typename Scalar, int Dim, typename F>
NelderMeadResult<Scalar, Dim> nelder_mead(F&& f, const Eigen::Matrix<Scalar, Dim, 1>& x0, Scalar step,
                                          const NelderMeadOptions& opts = {}) {
  using Vec = Eigen::Matrix<Scalar, Dim, 1>;
  const int n = static_cast<int>(x0.size());
  std::vector<Vec> v(n + 1, x0);
  std::vector<Scalar> fv(n + 1);
  for (int i = 0; i < n; ++i) v[i + 1][i] += step;
  int evals = 0;
  auto eval = [&](const Vec& p) {
    ++evals;
    return f(p);
  };
  for (int i = 0; i <= n; ++i) fv[i] = eval(v[i]);

  std::vector<int> order(n + 1);
  Scalar diameter = 0;
  bool converged = false;
  while (true) {
    for (int i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    {
      std::vector<Vec> sv(n + 1);
      std::vector<Scalar> sf(n + 1);
      for (int i = 0; i <= n; ++i) {
        sv[i] = v[order[i]];
        sf[i] = fv[order[i]];
      }
      v.swap(sv);
      fv.swap(sf);
    }
    diameter = 0;
    for (int i = 1; i <= n; ++i) diameter = std::max(diameter, (v[i] - v[0]).norm());
    if (diameter < opts.diameter_tolerance) {
      converged = true;
      break;
    }
    if (evals >= opts.max_evaluations) break;

    Vec centroid = Vec::Zero(n);
    for (int i = 0; i < n; ++i) centroid += v[i];
    centroid /= Scalar(n);
    const Vec xr = centroid + (centroid - v[n]);
    const Scalar fr = eval(xr);
    if (fr < fv[0]) {
      const Vec xe = centroid + Scalar(2) * (centroid - v[n]);
      const Scalar fe = eval(xe);
      if (fe < fr) {
        v[n] = xe;
        fv[n] = fe;
      } else {
        v[n] = xr;
        fv[n] = fr;
      }
      continue;
    }
    if (fr < fv[n - 1]) {
      v[n] = xr;
      fv[n] = fr;
      continue;
    }
    const bool outside = fr < fv[n];
    const Vec xc = outside ? Vec(centroid + Scalar(0.5) * (xr - centroid)) : Vec(centroid + Scalar(0.5) * (v[n] - centroid));
    const Scalar fc = eval(xc);
    if (fc < (outside ? fr : fv[n])) {
      v[n] = xc;
      fv[n] = fc;
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      v[i] = v[0] + Scalar(0.5) * (v[i] - v[0]);
      fv[i] = eval(v[i]);
    }
  }
  return {v[0], fv[0], diameter, evals, converged};
}

}  // namespace hartree
