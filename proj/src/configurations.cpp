#include "hartree/configurations.hpp"
#include "hartree/errors.hpp"

#include <cmath>
#include <numbers>

namespace hartree {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::PPP: return "PPP";
    case Variant::AAA: return "AAA";
    case Variant::PPA: return "PPA";
    case Variant::AAP: return "AAP";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  for (Variant v : {Variant::PPP, Variant::AAA, Variant::PPA, Variant::AAP})
    if (s == to_string(v)) return v;
  throw Error(ErrorKind::Validation, "unknown variant '" + s + "' (expected PPP, AAA, PPA or AAP)");
}

bool inner_alternating(Variant v) { return v == Variant::AAA || v == Variant::AAP; }
bool outer_alternating(Variant v) { return v == Variant::AAA || v == Variant::PPA; }

PeakConfig build_config(int k, double r, double rho, Variant variant) {
  if (k < 1) throw Error(ErrorKind::Domain, "k must be at least 1", k);
  if (!(r > 0.0) || !(rho > 0.0)) throw Error(ErrorKind::Domain, "ring radii must be positive");
  if ((inner_alternating(variant) || outer_alternating(variant)) && k % 2 != 0)
    throw Error(ErrorKind::Parity, "alternating sign pattern needs an even peak count", k);
  PeakConfig c;
  c.k = k;
  c.r = r;
  c.rho = rho;
  c.variant = variant;
  c.centers_inner.resize(3, k);
  c.centers_outer.resize(3, k);
  c.signs_inner.resize(k);
  c.signs_outer.resize(k);
  const double pi = std::numbers::pi;
  for (int j = 1; j <= k; ++j) {
    const double a = 2.0 * (j - 1) * pi / k, b = (2.0 * j - 1) * pi / k;
    c.centers_inner.col(j - 1) << r * std::cos(a), r * std::sin(a), 0.0;
    c.centers_outer.col(j - 1) << rho * std::cos(b), rho * std::sin(b), 0.0;
    const double alt = j % 2 == 0 ? 1.0 : -1.0;
    c.signs_inner[j - 1] = inner_alternating(variant) ? alt : 1.0;
    c.signs_outer[j - 1] = outer_alternating(variant) ? alt : 1.0;
  }
  return c;
}

std::pair<double, double> s_k_window(double k, double m, double C1, double C2) {
  if (m >= 1.0) throw Error(ErrorKind::ExponentBlowUp, "window exponent 1/(1-m) diverges for m >= 1", m);
  if (m < 0.5) throw Error(ErrorKind::Domain, "m must lie in [1/2, 1)", m);
  const double kl = k * std::log(k);
  if (!(kl > 0.0)) throw Error(ErrorKind::Domain, "k ln k must be positive", k);
  if (!(C1 > 0.0) || C1 > C2) throw Error(ErrorKind::Domain, "window needs 0 < C1 <= C2");
  const double s = std::pow(kl, 1.0 / (1.0 - m));
  return {C1 * s, C2 * s};
}

double symmetry_deviation(const Field3D& f, int k, double sign, double x2_parity) {
  if (k < 1) throw Error(ErrorKind::Domain, "k must be at least 1", k);
  const double t = 2.0 * std::numbers::pi / k, c = std::cos(t), s = std::sin(t);
  const int n = f.n_per_axis;
  double dev = 0.0;
  for (int kk = 0; kk < n; ++kk)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        const Eigen::Vector3d x = f.node(i, j, kk);
        const double u = f(i, j, kk);
        const Eigen::Vector3d images[3] = {
            {c * x[0] - s * x[1], s * x[0] + c * x[1], x[2]}, {x[0], -x[1], x[2]}, {x[0], x[1], -x[2]}};
        const double target[3] = {sign * u, x2_parity * u, u};
        for (int q = 0; q < 3; ++q) {
          const double v = f.interpolate(images[q]);
          if (!std::isnan(v)) dev = std::max(dev, std::abs(v - target[q]));
        }
      }
  return dev;
}

}  // namespace hartree
