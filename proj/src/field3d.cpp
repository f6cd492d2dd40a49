#include "hartree/field3d.hpp"
#include "hartree/checksum.hpp"
#include "hartree/errors.hpp"
#include "hartree/quadrature.hpp"

#include <fftw3.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string_view>
#include <cstring>
#include <fstream>

namespace hartree {

using Eigen::Index;
using Eigen::VectorXd;

Field3D::Field3D(double half_width, int n, const Eigen::Vector3d& c)
    : box_half_width(half_width), n_per_axis(n), center(c),
      values() {
  if (n < 32 || n % 2 != 0) throw Error(ErrorKind::Domain, "Field3D needs an even n_per_axis >= 32", n);
  if (!(half_width > 0.0)) throw Error(ErrorKind::Domain, "Field3D needs box_half_width > 0", half_width);
  values = VectorXd::Zero(static_cast<Index>(n) * n * n);
}

void Field3D::validate() const {
  if (n_per_axis < 32 || n_per_axis % 2 != 0)
    throw Error(ErrorKind::Domain, "Field3D needs an even n_per_axis >= 32", n_per_axis);
  if (!(box_half_width > 0.0)) throw Error(ErrorKind::Domain, "Field3D needs box_half_width > 0", box_half_width);
  if (values.size() != static_cast<Index>(n_per_axis) * n_per_axis * n_per_axis)
    throw Error(ErrorKind::Domain, "Field3D value count does not match n^3");
  if (!values.allFinite()) throw Error(ErrorKind::Numeric, "Field3D has non-finite values");
}

double Field3D::interpolate(const Eigen::Vector3d& x) const {
  const double h = spacing();
  int i0[3];
  double t[3];
  for (int a = 0; a < 3; ++a) {
    const double s = (x[a] - center[a] + box_half_width) / h;
    if (s < 0.0 || s > n_per_axis - 1) return std::numeric_limits<double>::quiet_NaN();
    int i = static_cast<int>(std::floor(s));
    if (i >= n_per_axis - 1) i = n_per_axis - 2;
    i0[a] = i;
    t[a] = s - i;
  }
  double acc = 0.0;
  for (int dz = 0; dz < 2; ++dz)
    for (int dy = 0; dy < 2; ++dy)
      for (int dx = 0; dx < 2; ++dx) {
        const double wgt = (dx ? t[0] : 1 - t[0]) * (dy ? t[1] : 1 - t[1]) * (dz ? t[2] : 1 - t[2]);
        acc += wgt * (*this)(i0[0] + dx, i0[1] + dy, i0[2] + dz);
      }
  return acc;
}

double Field3D::boundary_max_abs() const {
  const int n = n_per_axis;
  double m = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int e : {0, n - 1}) {
        m = std::max({m, std::abs((*this)(e, a, b)), std::abs((*this)(a, e, b)), std::abs((*this)(a, b, e))});
      }
  return m;
}

double inner_product(const Field3D& a, const Field3D& b) {
  if (!a.same_grid(b)) throw Error(ErrorKind::Domain, "inner_product: grids differ");
  return a.cell_volume() * a.values.dot(b.values);
}

struct FreeSpaceConvolver::Impl {
  int N = 0;                 // padded extent 2n
  Index complex_count = 0;   // N * N * (N/2 + 1)
  double* buffer = nullptr;  // in-place r2c buffer
  VectorXd kernel_hat;       // real spectrum of the (even) kernel
  fftw_plan forward = nullptr, backward = nullptr;

  ~Impl() {
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
    if (buffer) fftw_free(buffer);
  }
  Index real_index(int x, int y, int z) const { return x + static_cast<Index>(2 * (N / 2 + 1)) * (y + static_cast<Index>(N) * z); }
};

FreeSpaceConvolver::FreeSpaceConvolver(int n_per_axis, double spacing)
    : n_(n_per_axis), h_(spacing), impl_(std::make_unique<Impl>()) {
  auto& im = *impl_;
  im.N = 2 * n_;
  const int N = im.N;
  im.complex_count = static_cast<Index>(N) * N * (N / 2 + 1);
  im.buffer = fftw_alloc_real(2 * im.complex_count);
  if (!im.buffer) throw Error(ErrorKind::Numeric, "FFT buffer allocation failed");
  auto* spec = reinterpret_cast<fftw_complex*>(im.buffer);
  im.forward = fftw_plan_dft_r2c_3d(N, N, N, im.buffer, spec, FFTW_ESTIMATE);
  im.backward = fftw_plan_dft_c2r_3d(N, N, N, spec, im.buffer, FFTW_ESTIMATE);

  const double origin = unit_cube_inverse_distance_mean() / h_;
  auto wrap = [N](int m) { return m <= N / 2 ? m : m - N; };
  for (int z = 0; z < N; ++z)
    for (int y = 0; y < N; ++y)
      for (int x = 0; x < N; ++x) {
        const double dx = wrap(x), dy = wrap(y), dz = wrap(z);
        const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
        im.buffer[im.real_index(x, y, z)] = r == 0.0 ? origin : 1.0 / (h_ * r);
      }
  fftw_execute(im.forward);
  im.kernel_hat.resize(im.complex_count);
  for (Index c = 0; c < im.complex_count; ++c) im.kernel_hat[c] = spec[c][0];
}

FreeSpaceConvolver::~FreeSpaceConvolver() = default;

Field3D FreeSpaceConvolver::potential(const Field3D& sq) {
  if (sq.n_per_axis != n_ || std::abs(sq.spacing() - h_) > 1e-12 * h_)
    throw Error(ErrorKind::Domain, "convolver grid does not match field");
  Field3D out(sq.box_half_width, sq.n_per_axis, sq.center);
  const double peak = sq.max_abs();
  if (peak == 0.0) return out;
  const double edge = sq.boundary_max_abs();
  if (edge > 1e-10 * peak)
    throw Error(ErrorKind::ContractViolation, "source does not decay to 1e-10 of its maximum at the box boundary",
                edge / peak);

  auto& im = *impl_;
  std::memset(im.buffer, 0, sizeof(double) * 2 * im.complex_count);
  for (int z = 0; z < n_; ++z)
    for (int y = 0; y < n_; ++y)
      for (int x = 0; x < n_; ++x) im.buffer[im.real_index(x, y, z)] = sq(x, y, z);
  fftw_execute(im.forward);
  auto* spec = reinterpret_cast<fftw_complex*>(im.buffer);
  for (Index c = 0; c < im.complex_count; ++c) {
    spec[c][0] *= im.kernel_hat[c];
    spec[c][1] *= im.kernel_hat[c];
  }
  fftw_execute(im.backward);
  const double N = im.N;
  const double scale = sq.cell_volume() / (N * N * N);
  for (int z = 0; z < n_; ++z)
    for (int y = 0; y < n_; ++y)
      for (int x = 0; x < n_; ++x) out(x, y, z) = scale * im.buffer[im.real_index(x, y, z)];
  return out;
}

Field3D grid_potential(const Field3D& sq) {
  sq.validate();
  FreeSpaceConvolver conv(sq.n_per_axis, sq.spacing());
  return conv.potential(sq);
}

void write_field(const Field3D& f, const std::filesystem::path& base) {
  f.validate();
  const auto bytes = std::string_view(reinterpret_cast<const char*>(f.values.data()),
                                      sizeof(double) * static_cast<size_t>(f.values.size()));
  std::filesystem::path bin = base, side = base;
  bin += ".bin";
  side += ".json";
  std::ofstream out(bin, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + bin.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  nlohmann::json meta = {{"format", "float64-le, x fastest"},
                         {"box_half_width", f.box_half_width},
                         {"n_per_axis", f.n_per_axis},
                         {"spacing", f.spacing()},
                         {"center", {f.center[0], f.center[1], f.center[2]}},
                         {"checksum", to_hex(fnv1a64(bytes))}};
  std::ofstream js(side);
  if (!js) throw Error(ErrorKind::Io, "cannot write " + side.string());
  js << meta.dump(2) << '\n';
}

Field3D read_field(const std::filesystem::path& base) {
  std::filesystem::path bin = base, side = base;
  bin += ".bin";
  side += ".json";
  std::ifstream js(side);
  if (!js) throw Error(ErrorKind::Io, "cannot read " + side.string());
  nlohmann::json meta;
  try {
    js >> meta;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::Io, std::string("bad sidecar: ") + e.what());
  }
  const auto c = meta.at("center");
  Field3D f(meta.at("box_half_width").get<double>(), meta.at("n_per_axis").get<int>(),
            Eigen::Vector3d(c.at(0).get<double>(), c.at(1).get<double>(), c.at(2).get<double>()));
  std::ifstream in(bin, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + bin.string());
  std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (raw.size() != sizeof(double) * static_cast<size_t>(f.values.size()))
    throw Error(ErrorKind::Checksum, "field dump size does not match sidecar");
  if (to_hex(fnv1a64(raw)) != meta.at("checksum").get<std::string>())
    throw Error(ErrorKind::Checksum, "field dump checksum mismatch");
  std::memcpy(f.values.data(), raw.data(), raw.size());
  return f;
}

}  // namespace hartree
