#include "hartree/ground_state.hpp"
#include "hartree/checksum.hpp"
#include "hartree/errors.hpp"
#include "hartree/newtonian.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace hartree {

using Eigen::Index;
using Eigen::VectorXd;

void RadialGrid::validate() const {
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw Error(ErrorKind::Domain, "radial grid needs r_max > 0", r_max);
  if (n_points < 100) throw Error(ErrorKind::Domain, "radial grid needs n_points >= 100", n_points);
}

double RadialProfile::operator()(double r) const {
  const Index n = grid.n_points;
  const double h = grid.spacing();
  r = std::abs(r);
  if (r > grid.r_max) {
    if (far_field == FarField::Coulomb) return values[n] * grid.r_max / r;
    return 0.0;
  }
  auto at = [&](Index i) -> double {
    if (i < 0) i = -i;
    if (i <= n) return values[i];
    if (far_field == FarField::Coulomb) return values[n] * grid.r_max / grid.node(i);
    return 0.0;
  };
  const double t = r / h;
  Index i = static_cast<Index>(std::floor(t));
  if (i >= n) i = n - 1;
  const double x = t - static_cast<double>(i);
  // cubic Lagrange through nodes i-1, i, i+1, i+2
  const double p0 = at(i - 1), p1 = at(i), p2 = at(i + 1), p3 = at(i + 2);
  return (-x * (x - 1.0) * (x - 2.0) / 6.0) * p0 + ((x + 1.0) * (x - 1.0) * (x - 2.0) / 2.0) * p1 +
         (-(x + 1.0) * x * (x - 2.0) / 2.0) * p2 + ((x + 1.0) * x * (x - 1.0) / 6.0) * p3;
}

double RadialProfile::support_radius() const {
  return far_field == FarField::Coulomb ? std::numeric_limits<double>::infinity() : grid.r_max;
}

double radial_mass(const RadialProfile& u) {
  const VectorXd r = u.grid.nodes();
  const VectorXd f = (u.values.array() * r.array()).square().matrix();
  const double h = u.grid.spacing();
  return 4.0 * std::numbers::pi * h * (f.sum() - 0.5 * (f[0] + f[f.size() - 1]));
}

namespace {

// Constant-coefficient tridiagonal solve for (-D2 + 1) v = rhs on the
// interior nodes, v_0 = v_N = 0.
class RadialHelmholtz {
 public:
  explicit RadialHelmholtz(const RadialGrid& grid) : h_(grid.spacing()), m_(grid.n_points - 1) {
    const double off = -1.0 / (h_ * h_);
    const double diag = 2.0 / (h_ * h_) + 1.0;
    cprime_.resize(m_);
    denom_.resize(m_);
    double c = 0.0;
    for (Index i = 0; i < m_; ++i) {
      const double d = diag - off * c;
      denom_[i] = d;
      c = off / d;
      cprime_[i] = c;
    }
    off_ = off;
  }

  VectorXd solve(const VectorXd& rhs_full) const {
    VectorXd v = VectorXd::Zero(m_ + 2);
    VectorXd dp(m_);
    double prev = 0.0;
    for (Index i = 0; i < m_; ++i) {
      prev = (rhs_full[i + 1] - off_ * prev) / denom_[i];
      dp[i] = prev;
    }
    v[m_] = dp[m_ - 1];
    for (Index i = m_ - 2; i >= 0; --i) v[i + 1] = dp[i] - cprime_[i] * v[i + 2];
    return v;
  }

 private:
  double h_;
  Index m_;
  double off_ = 0.0;
  VectorXd cprime_, denom_;
};

VectorXd from_v(const VectorXd& v, const VectorXd& r) {
  VectorXd u(v.size());
  u.tail(v.size() - 1) = v.tail(v.size() - 1).cwiseQuotient(r.tail(r.size() - 1));
  // even in r: u = a + b r^2 through nodes 1 and 2
  u[0] = (4.0 * u[1] - u[2]) / 3.0;
  return u;
}

struct Quadratures {
  double K, M, P;
};

// Discrete forms consistent with the tridiagonal operator.
Quadratures quadratures(const VectorXd& v, const VectorXd& phi, double h) {
  const double four_pi = 4.0 * std::numbers::pi;
  const Index n = v.size();
  const double K = four_pi * (v.tail(n - 1) - v.head(n - 1)).squaredNorm() / h;
  const double M = four_pi * h * v.squaredNorm();
  const double P = four_pi * h * (phi.array() * v.array().square()).sum();
  return {K, M, P};
}

}  // namespace

RadialProfile solve_ground_state(const RadialGrid& grid, const SolverOptions& opts,
                                 const std::optional<VectorXd>& initial_guess) {
  grid.validate();
  if (!(opts.tolerance > 0.0 && opts.tolerance <= 1e-3))
    throw Error(ErrorKind::Domain, "solver tolerance must lie in (0, 1e-3]", opts.tolerance);

  const VectorXd r = grid.nodes();
  const double h = grid.spacing();
  VectorXd u;
  if (initial_guess) {
    if (initial_guess->size() != grid.size()) throw Error(ErrorKind::Domain, "initial guess size mismatch");
    if (!initial_guess->allFinite()) throw Error(ErrorKind::DegenerateInput, "initial guess not finite");
    if (!(initial_guess->maxCoeff() > 0.0))
      throw Error(ErrorKind::DegenerateInput, "initial guess has no positive part");
    u = *initial_guess;
  } else {
    u = (-0.5 * r.array().square()).exp().matrix();
  }

  const RadialHelmholtz helmholtz(grid);
  RadialProfile current(grid, u);
  VectorXd phi = radial_potential(current).values;

  double update = std::numeric_limits<double>::infinity();
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    const VectorXd v = r.cwiseProduct(u);
    const VectorXd v_new = helmholtz.solve(phi.cwiseProduct(v));
    VectorXd u_new = from_v(v_new, r);
    VectorXd phi_new = radial_potential(RadialProfile(grid, u_new)).values;
    const auto q = quadratures(v_new, phi_new, h);
    if (!(q.P > 0.0) || !std::isfinite(q.P))
      throw Error(ErrorKind::DegenerateInput, "iterate collapsed to zero", q.P);
    const double c2 = (q.K + q.M) / q.P;
    u_new *= std::sqrt(c2);
    phi_new *= c2;
    update = (u_new - u).cwiseAbs().maxCoeff() / u_new.cwiseAbs().maxCoeff();
    u = std::move(u_new);
    phi = std::move(phi_new);
    if (update < opts.tolerance) break;
  }
  if (!(update < opts.tolerance))
    throw Error(ErrorKind::NonConvergence,
                "ground state iteration did not converge in " + std::to_string(opts.max_iterations) + " steps",
                update);

  RadialProfile w(grid, u);
  const auto stats = ground_state_stats(w);
  const double worst = std::max(stats.nehari_residual, stats.pohozaev_residual);
  if (worst > 1e-2) throw Error(ErrorKind::Accuracy, "identity residual above 1e-2 (grid too coarse or r_max too small)", worst);
  const double tail = tail_mass_fraction(w);
  if (tail > 1e-6) throw Error(ErrorKind::Accuracy, "r_max too small: tail mass fraction above 1e-6", tail);

  fit_tail(w);
  return w;
}

void fit_tail(RadialProfile& w) {
  const RadialGrid& grid = w.grid;
  const VectorXd& u = w.values;
  const double h = grid.spacing();
  double ra = 10.0, rb = 15.0;
  if (rb > 0.7 * grid.r_max) {
    ra = 0.3 * grid.r_max;
    rb = 0.5 * grid.r_max;
  }
  const Index ia = static_cast<Index>(std::ceil(ra / h)), ib = static_cast<Index>(std::floor(rb / h));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double cnt = static_cast<double>(ib - ia + 1);
  for (Index i = ia; i <= ib; ++i) {
    const double y = std::log(u[i]);
    sx += grid.node(i);
    sy += y;
    sxx += grid.node(i) * grid.node(i);
    sxy += grid.node(i) * y;
  }
  w.tail_rate = -(cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  w.tail_amplitude = decay_report(w, ra, rb).mean;
}

GroundStateStats ground_state_stats(const RadialProfile& p) {
  GroundStateStats s;
  if (!p.values.allFinite()) throw Error(ErrorKind::Numeric, "profile has non-finite values");
  if (p.max_abs() == 0.0) {
    s.degenerate = true;
    return s;
  }
  const VectorXd r = p.grid.nodes();
  const VectorXd v = r.cwiseProduct(p.values);
  const VectorXd phi = radial_potential(p).values;
  const auto q = quadratures(v, phi, p.grid.spacing());
  s.K_w = q.K;
  s.M_w = q.M;
  s.P_w = q.P;
  s.E_w = 0.5 * (q.K + q.M) - 0.25 * q.P;
  s.nehari_residual = std::abs(q.K + q.M - q.P) / q.P;
  s.pohozaev_residual = std::abs(0.5 * q.K + 1.5 * q.M - 1.25 * q.P) / q.P;
  if (!std::isfinite(s.E_w) || !std::isfinite(s.nehari_residual))
    throw Error(ErrorKind::Numeric, "non-finite quadrature");
  return s;
}

DecayReport decay_report(const RadialProfile& p, double r_a, double r_b, DecayLaw law) {
  if (!(r_a >= 0.0 && r_a < r_b && r_b <= 0.7 * p.grid.r_max))
    throw Error(ErrorKind::Range, "decay window must satisfy 0 <= r_a < r_b <= 0.7 r_max", r_b);
  const double h = p.grid.spacing();
  const double exponent = law == DecayLaw::Exponential ? 1.0 : 1.0 - 0.5 * radial_mass(p);
  const Index ia = static_cast<Index>(std::ceil(r_a / h - 1e-9));
  const Index ib = static_cast<Index>(std::floor(r_b / h + 1e-9));
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0.0;
  for (Index i = ia; i <= ib; ++i) {
    const double r = p.grid.node(i);
    const double y = p.values[i] * std::pow(r, exponent) * std::exp(r);
    lo = std::min(lo, y);
    hi = std::max(hi, y);
    sum += y;
  }
  DecayReport rep;
  rep.r_a = r_a;
  rep.r_b = r_b;
  rep.law = law;
  rep.mean = sum / static_cast<double>(ib - ia + 1);
  rep.relative_variation = (hi - lo) / std::abs(rep.mean);
  return rep;
}

namespace {
std::string cache_body(const RadialProfile& p) {
  std::ostringstream os;
  os.precision(17);
  for (Index i = 0; i < p.values.size(); ++i) os << p.grid.node(i) << ',' << p.values[i] << '\n';
  return os.str();
}
}  // namespace

void write_profile_cache(const RadialProfile& p, const std::filesystem::path& path) {
  const std::string body = cache_body(p);
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out.precision(17);
  out << "# r_max=" << p.grid.r_max << " n=" << p.grid.n_points << " checksum=" << to_hex(fnv1a64(body)) << '\n'
      << body;
}

RadialProfile read_profile_cache(const std::filesystem::path& path, const std::optional<RadialGrid>& expected) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  std::string header;
  std::getline(in, header);
  RadialGrid grid;
  char sum_hex[64] = {0};
  if (std::sscanf(header.c_str(), "# r_max=%lf n=%d checksum=%63s", &grid.r_max, &grid.n_points, sum_hex) != 3)
    throw Error(ErrorKind::Checksum, "malformed cache header in " + path.string());
  std::ostringstream rest;
  rest << in.rdbuf();
  const std::string body = rest.str();
  if (to_hex(fnv1a64(body)) != sum_hex) throw Error(ErrorKind::Checksum, "checksum mismatch in " + path.string());
  if (expected && !(*expected == grid)) throw Error(ErrorKind::Checksum, "cached grid metadata does not match");
  grid.validate();

  VectorXd values(grid.size());
  std::istringstream rows(body);
  std::string line;
  Index i = 0;
  while (std::getline(rows, line)) {
    if (line.empty()) continue;
    if (i >= values.size()) throw Error(ErrorKind::Checksum, "too many rows in cache");
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::Checksum, "malformed cache row");
    values[i++] = std::stod(line.substr(comma + 1));
  }
  if (i != values.size()) throw Error(ErrorKind::Checksum, "row count does not match n");
  return RadialProfile(grid, std::move(values));
}

}  // namespace hartree
