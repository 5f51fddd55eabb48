#include "qmx/field_ops.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qmx/parallel.hpp"

namespace qmx {

namespace {

inline int up(int i, int n) { return i + 1 == n ? 0 : i + 1; }
inline int dn(int i, int n) { return i == 0 ? n - 1 : i - 1; }

struct CellIndex {
  int i, j, k;
};

inline CellIndex decode(std::size_t c, const Grid& g) {
  const int i = static_cast<int>(c % g.nx);
  const int j = static_cast<int>((c / g.nx) % g.ny);
  const int k = static_cast<int>(c / (static_cast<std::size_t>(g.nx) * g.ny));
  return {i, j, k};
}

}  // namespace

VectorField grad(const ScalarField& s) {
  const Grid& g = s.grid;
  VectorField out(g);
  const double hx = 0.5 / g.dx, hy = 0.5 / g.dy, hz = 0.5 / g.dz;
  parallel_for(g.cells(), [&](std::size_t b, std::size_t e) {
    for (std::size_t c = b; c < e; ++c) {
      const auto [i, j, k] = decode(c, g);
      out.x[c] = (s.v[g.idx(up(i, g.nx), j, k)] - s.v[g.idx(dn(i, g.nx), j, k)]) * hx;
      out.y[c] = (s.v[g.idx(i, up(j, g.ny), k)] - s.v[g.idx(i, dn(j, g.ny), k)]) * hy;
      out.z[c] = (s.v[g.idx(i, j, up(k, g.nz))] - s.v[g.idx(i, j, dn(k, g.nz))]) * hz;
    }
  });
  return out;
}

ScalarField div(const VectorField& v) {
  const Grid& g = v.grid;
  ScalarField out(g);
  const double hx = 0.5 / g.dx, hy = 0.5 / g.dy, hz = 0.5 / g.dz;
  parallel_for(g.cells(), [&](std::size_t b, std::size_t e) {
    for (std::size_t c = b; c < e; ++c) {
      const auto [i, j, k] = decode(c, g);
      out.v[c] = (v.x[g.idx(up(i, g.nx), j, k)] - v.x[g.idx(dn(i, g.nx), j, k)]) * hx +
                 (v.y[g.idx(i, up(j, g.ny), k)] - v.y[g.idx(i, dn(j, g.ny), k)]) * hy +
                 (v.z[g.idx(i, j, up(k, g.nz))] - v.z[g.idx(i, j, dn(k, g.nz))]) * hz;
    }
  });
  return out;
}

VectorField curl(const VectorField& v) {
  const Grid& g = v.grid;
  VectorField out(g);
  const double hx = 0.5 / g.dx, hy = 0.5 / g.dy, hz = 0.5 / g.dz;
  parallel_for(g.cells(), [&](std::size_t b, std::size_t e) {
    for (std::size_t c = b; c < e; ++c) {
      const auto [i, j, k] = decode(c, g);
      const double dy_vz =
          (v.z[g.idx(i, up(j, g.ny), k)] - v.z[g.idx(i, dn(j, g.ny), k)]) * hy;
      const double dz_vy =
          (v.y[g.idx(i, j, up(k, g.nz))] - v.y[g.idx(i, j, dn(k, g.nz))]) * hz;
      const double dz_vx =
          (v.x[g.idx(i, j, up(k, g.nz))] - v.x[g.idx(i, j, dn(k, g.nz))]) * hz;
      const double dx_vz =
          (v.z[g.idx(up(i, g.nx), j, k)] - v.z[g.idx(dn(i, g.nx), j, k)]) * hx;
      const double dx_vy =
          (v.y[g.idx(up(i, g.nx), j, k)] - v.y[g.idx(dn(i, g.nx), j, k)]) * hx;
      const double dy_vx =
          (v.x[g.idx(i, up(j, g.ny), k)] - v.x[g.idx(i, dn(j, g.ny), k)]) * hy;
      out.x[c] = dy_vz - dz_vy;
      out.y[c] = dz_vx - dx_vz;
      out.z[c] = dx_vy - dy_vx;
    }
  });
  return out;
}

ScalarField laplacian(const ScalarField& s) { return div(grad(s)); }

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

// Manufactured trigonometric fields on the unit cube with known derivatives.
ScalarField trig_scalar(const Grid& g) {
  ScalarField f(g);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double x = i * g.dx, y = j * g.dy, z = k * g.dz;
        f.v[g.idx(i, j, k)] =
            std::sin(kTau * x) * std::cos(kTau * y) * std::sin(kTau * z);
      }
  return f;
}

VectorField trig_scalar_grad(const Grid& g) {
  VectorField f(g);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double x = i * g.dx, y = j * g.dy, z = k * g.dz;
        const std::size_t c = g.idx(i, j, k);
        f.x[c] = kTau * std::cos(kTau * x) * std::cos(kTau * y) * std::sin(kTau * z);
        f.y[c] = -kTau * std::sin(kTau * x) * std::sin(kTau * y) * std::sin(kTau * z);
        f.z[c] = kTau * std::sin(kTau * x) * std::cos(kTau * y) * std::cos(kTau * z);
      }
  return f;
}

ScalarField trig_scalar_lap(const Grid& g) {
  ScalarField f = trig_scalar(g);
  for (auto& v : f.v) v *= -3.0 * kTau * kTau;
  return f;
}

VectorField trig_vector(const Grid& g) {
  VectorField f(g);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double x = i * g.dx, y = j * g.dy, z = k * g.dz;
        const std::size_t c = g.idx(i, j, k);
        f.x[c] = std::sin(kTau * x) * std::cos(kTau * y);
        f.y[c] = std::sin(kTau * y) * std::cos(kTau * z);
        f.z[c] = std::sin(kTau * z) * std::cos(kTau * x);
      }
  return f;
}

ScalarField trig_vector_div(const Grid& g) {
  ScalarField f(g);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double x = i * g.dx, y = j * g.dy, z = k * g.dz;
        f.v[g.idx(i, j, k)] = kTau * (std::cos(kTau * x) * std::cos(kTau * y) +
                                      std::cos(kTau * y) * std::cos(kTau * z) +
                                      std::cos(kTau * z) * std::cos(kTau * x));
      }
  return f;
}

VectorField trig_vector_curl(const Grid& g) {
  VectorField f(g);
  for (int k = 0; k < g.nz; ++k)
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) {
        const double x = i * g.dx, y = j * g.dy, z = k * g.dz;
        const std::size_t c = g.idx(i, j, k);
        f.x[c] = kTau * std::sin(kTau * y) * std::sin(kTau * z);
        f.y[c] = kTau * std::sin(kTau * z) * std::sin(kTau * x);
        f.z[c] = kTau * std::sin(kTau * x) * std::sin(kTau * y);
      }
  return f;
}

}  // namespace

double convergence_order(DiffOp op, AnalyticCase ac, const std::vector<int>& resolutions) {
  if (resolutions.size() < 3)
    throw std::invalid_argument("convergence_order: need at least 3 resolutions");
  for (int n : resolutions)
    if (n < 8) throw std::invalid_argument("convergence_order: resolutions must be >= 8");
  const bool scalar_in = op != DiffOp::Div && op != DiffOp::Curl;
  if (op != DiffOp::Identity &&
      ac != (scalar_in ? AnalyticCase::TrigScalar : AnalyticCase::TrigVector))
    throw std::invalid_argument("convergence_order: analytic case arity does not match operator");

  std::vector<double> log_h, log_err;
  double scale = 0.0;
  for (int n : resolutions) {
    const double d = 1.0 / n;
    const Grid g = make_grid(n, n, n, d, d, d);
    double err = 0.0;
    switch (op) {
      case DiffOp::Identity: {
        if (ac == AnalyticCase::TrigScalar) {
          const ScalarField f = trig_scalar(g);
          err = l2_norm(f - f);
          scale = std::max(scale, l2_norm(f));
        } else {
          const VectorField f = trig_vector(g);
          err = l2_norm(f - f);
          scale = std::max(scale, l2_norm(f));
        }
        break;
      }
      case DiffOp::Grad: {
        const VectorField ref = trig_scalar_grad(g);
        err = l2_norm(grad(trig_scalar(g)) - ref);
        scale = std::max(scale, l2_norm(ref));
        break;
      }
      case DiffOp::Div: {
        const ScalarField ref = trig_vector_div(g);
        err = l2_norm(div(trig_vector(g)) - ref);
        scale = std::max(scale, l2_norm(ref));
        break;
      }
      case DiffOp::Curl: {
        const VectorField ref = trig_vector_curl(g);
        err = l2_norm(curl(trig_vector(g)) - ref);
        scale = std::max(scale, l2_norm(ref));
        break;
      }
      case DiffOp::Laplacian: {
        const ScalarField ref = trig_scalar_lap(g);
        err = l2_norm(laplacian(trig_scalar(g)) - ref);
        scale = std::max(scale, l2_norm(ref));
        break;
      }
    }
    log_h.push_back(std::log(d));
    log_err.push_back(err);  // converted to log below once the floor is known
  }

  // Errors at rounding level mean the operator reproduces the case exactly.
  const double floor = 1e-13 * (scale + 1.0);
  bool exact = true;
  for (double e : log_err) exact = exact && (e <= floor);
  if (exact) return std::numeric_limits<double>::infinity();

  for (double& e : log_err) e = std::log(e);
  const std::size_t m = log_h.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += log_h[i];
    sy += log_err[i];
    sxx += log_h[i] * log_h[i];
    sxy += log_h[i] * log_err[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace qmx
