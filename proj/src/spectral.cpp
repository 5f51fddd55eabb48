#include "qmx/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>
#include <vector>

#include "qmx/field_ops.hpp"

namespace qmx {

namespace {

// FFTW's planner is not thread-safe; execution here is serialized as well,
// which also keeps transform results identical regardless of worker count.
std::mutex g_fft_mutex;

struct Rfft {
  const Grid& g;
  std::size_t n_complex;
  double* real;
  fftw_complex* spec;
  fftw_plan fwd, bwd;

  explicit Rfft(const Grid& grid)
      : g(grid),
        n_complex(static_cast<std::size_t>(grid.nz) * grid.ny * (grid.nx / 2 + 1)) {
    real = fftw_alloc_real(g.cells());
    spec = fftw_alloc_complex(n_complex);
    // row-major dims, slowest first; x is the contiguous (halved) axis
    fwd = fftw_plan_dft_r2c_3d(g.nz, g.ny, g.nx, real, spec, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_c2r_3d(g.nz, g.ny, g.nx, spec, real, FFTW_ESTIMATE);
  }
  ~Rfft() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(real);
    fftw_free(spec);
  }
  Rfft(const Rfft&) = delete;
  Rfft& operator=(const Rfft&) = delete;

  void load(const std::vector<double>& v) {
    std::memcpy(real, v.data(), v.size() * sizeof(double));
  }
  void store(std::vector<double>& v) const {
    std::memcpy(v.data(), real, v.size() * sizeof(double));
  }
  std::size_t spec_idx(int jx, int jy, int jz) const {
    return (static_cast<std::size_t>(jz) * g.ny + jy) * (g.nx / 2 + 1) + jx;
  }
};

// Symbol of the composed centered-difference laplacian for integer
// frequencies (jx, jy, jz); zero exactly on mean/Nyquist combinations.
double composed_symbol(const Grid& g, int jx, int jy, int jz) {
  const double sx = std::sin(2.0 * std::numbers::pi * jx / g.nx) / g.dx;
  const double sy = std::sin(2.0 * std::numbers::pi * jy / g.ny) / g.dy;
  const double sz = std::sin(2.0 * std::numbers::pi * jz / g.nz) / g.dz;
  return -(sx * sx + sy * sy + sz * sz);
}

bool is_null_mode(const Grid& g, int jx, int jy, int jz) {
  auto axis_null = [](int j, int n) { return j == 0 || 2 * j == n; };
  return axis_null(jx, g.nx) && axis_null(jy, g.ny) && axis_null(jz, g.nz);
}

}  // namespace

PoissonResult poisson_periodic(const ScalarField& rhs) {
  std::lock_guard<std::mutex> lock(g_fft_mutex);
  const Grid& g = rhs.grid;
  const double inv_n = 1.0 / static_cast<double>(g.cells());

  Rfft fft(g);
  fft.load(rhs.v);
  fftw_execute(fft.fwd);

  std::vector<fftw_complex> dropped(fft.n_complex);
  for (auto& c : dropped) c[0] = c[1] = 0.0;

  for (int jz = 0; jz < g.nz; ++jz)
    for (int jy = 0; jy < g.ny; ++jy)
      for (int jx = 0; jx <= g.nx / 2; ++jx) {
        const std::size_t s = fft.spec_idx(jx, jy, jz);
        if (is_null_mode(g, jx, jy, jz)) {
          dropped[s][0] = fft.spec[s][0] * inv_n;
          dropped[s][1] = fft.spec[s][1] * inv_n;
          fft.spec[s][0] = fft.spec[s][1] = 0.0;
        } else {
          const double lam = composed_symbol(g, jx, jy, jz);
          fft.spec[s][0] *= inv_n / lam;
          fft.spec[s][1] *= inv_n / lam;
        }
      }

  PoissonResult out{ScalarField(g), 0.0};
  fftw_execute(fft.bwd);
  fft.store(out.phi.v);

  // Materialize the removed content to measure it exactly as a field.
  std::memcpy(fft.spec, dropped.data(), dropped.size() * sizeof(fftw_complex));
  fftw_execute(fft.bwd);
  ScalarField null_part(g);
  fft.store(null_part.v);
  out.dropped_rms = l2_norm(null_part);
  return out;
}

namespace {

void lowpass_component(Rfft& fft, std::vector<double>& v, double cutoff) {
  const Grid& g = fft.g;
  const double inv_n = 1.0 / static_cast<double>(g.cells());
  fft.load(v);
  fftw_execute(fft.fwd);
  auto keep_axis = [cutoff](int j, int n) {
    const int f = j <= n / 2 ? j : n - j;  // signed frequency magnitude
    return f <= cutoff * (n / 2.0);
  };
  for (int jz = 0; jz < g.nz; ++jz)
    for (int jy = 0; jy < g.ny; ++jy)
      for (int jx = 0; jx <= g.nx / 2; ++jx) {
        const std::size_t s = fft.spec_idx(jx, jy, jz);
        const bool keep =
            keep_axis(jx, g.nx) && keep_axis(jy, g.ny) && keep_axis(jz, g.nz);
        const double m = keep ? inv_n : 0.0;
        fft.spec[s][0] *= m;
        fft.spec[s][1] *= m;
      }
  fftw_execute(fft.bwd);
  fft.store(v);
}

}  // namespace

void spectral_lowpass(ScalarField& f, double cutoff) {
  std::lock_guard<std::mutex> lock(g_fft_mutex);
  Rfft fft(f.grid);
  lowpass_component(fft, f.v, cutoff);
}

void spectral_lowpass(VectorField& f, double cutoff) {
  std::lock_guard<std::mutex> lock(g_fft_mutex);
  Rfft fft(f.grid);
  lowpass_component(fft, f.x, cutoff);
  lowpass_component(fft, f.y, cutoff);
  lowpass_component(fft, f.z, cutoff);
}

VectorField divergence_free_part(const VectorField& w) {
  const ScalarField d = div(w);
  const PoissonResult p = poisson_periodic(d);
  return w - grad(p.phi);
}

VectorField solve_curl_system(const VectorField& w) {
  // For divergence-free w: curl(curl(B)) = -lap(B), so B = -lap_inv(curl(w))
  // solves curl(B) = w up to null-space content, with div(B) = 0 for free.
  const VectorField cw = curl(w);
  VectorField b(w.grid);
  {
    ScalarField comp(w.grid);
    comp.v = cw.x;
    b.x = poisson_periodic(comp).phi.v;
    comp.v = cw.y;
    b.y = poisson_periodic(comp).phi.v;
    comp.v = cw.z;
    b.z = poisson_periodic(comp).phi.v;
  }
  for (std::size_t c = 0; c < b.size(); ++c) {
    b.x[c] = -b.x[c];
    b.y[c] = -b.y[c];
    b.z[c] = -b.z[c];
  }
  return b;
}

}  // namespace qmx
