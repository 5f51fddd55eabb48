#pragma once

// Grid-sampled fields: one real per cell (scalar), three (vector, stored as
// separate component arrays), or four (quaternion: scalar + vector). All
// reductions here run in a fixed sequential order so results are independent
// of the worker count.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qmx/grid.hpp"

namespace qmx {

struct ScalarField {
  Grid grid;
  std::vector<double> v;

  ScalarField() = default;
  explicit ScalarField(const Grid& g) : grid(g), v(g.cells(), 0.0) {}

  double& operator[](std::size_t c) { return v[c]; }
  double operator[](std::size_t c) const { return v[c]; }
  std::size_t size() const { return v.size(); }
};

struct VectorField {
  Grid grid;
  std::vector<double> x, y, z;

  VectorField() = default;
  explicit VectorField(const Grid& g)
      : grid(g), x(g.cells(), 0.0), y(g.cells(), 0.0), z(g.cells(), 0.0) {}

  std::size_t size() const { return x.size(); }
};

// Quaternion-valued field: scalar part plus vector part on a shared grid.
struct QuatField {
  ScalarField s;
  VectorField v;

  QuatField() = default;
  explicit QuatField(const Grid& g) : s(g), v(g) {}
};

inline void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw std::invalid_argument("fields live on different grids");
}

// ---- elementwise arithmetic (allocating convenience forms) ----

inline ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid);
  ScalarField out(a.grid);
  for (std::size_t c = 0; c < out.size(); ++c) out.v[c] = a.v[c] - b.v[c];
  return out;
}

inline ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid);
  ScalarField out(a.grid);
  for (std::size_t c = 0; c < out.size(); ++c) out.v[c] = a.v[c] + b.v[c];
  return out;
}

inline ScalarField operator*(double s, const ScalarField& a) {
  ScalarField out(a.grid);
  for (std::size_t c = 0; c < out.size(); ++c) out.v[c] = s * a.v[c];
  return out;
}

inline VectorField operator-(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid, b.grid);
  VectorField out(a.grid);
  for (std::size_t c = 0; c < out.size(); ++c) {
    out.x[c] = a.x[c] - b.x[c];
    out.y[c] = a.y[c] - b.y[c];
    out.z[c] = a.z[c] - b.z[c];
  }
  return out;
}

inline VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid, b.grid);
  VectorField out(a.grid);
  for (std::size_t c = 0; c < out.size(); ++c) {
    out.x[c] = a.x[c] + b.x[c];
    out.y[c] = a.y[c] + b.y[c];
    out.z[c] = a.z[c] + b.z[c];
  }
  return out;
}

inline VectorField operator*(double s, const VectorField& a) {
  VectorField out(a.grid);
  for (std::size_t c = 0; c < out.size(); ++c) {
    out.x[c] = s * a.x[c];
    out.y[c] = s * a.y[c];
    out.z[c] = s * a.z[c];
  }
  return out;
}

inline QuatField operator-(const QuatField& a, const QuatField& b) {
  QuatField out;
  out.s = a.s - b.s;
  out.v = a.v - b.v;
  return out;
}

inline QuatField operator+(const QuatField& a, const QuatField& b) {
  QuatField out;
  out.s = a.s + b.s;
  out.v = a.v + b.v;
  return out;
}

// ---- deterministic reductions ----
// "L2" norms are root-mean-square over cells (and over components for vector
// and quaternion fields), so values are comparable across resolutions.

inline double l2_norm(const ScalarField& f) {
  double acc = 0.0;
  for (std::size_t c = 0; c < f.size(); ++c) acc += f.v[c] * f.v[c];
  return std::sqrt(acc / static_cast<double>(f.size()));
}

inline double l2_norm(const VectorField& f) {
  double acc = 0.0;
  for (std::size_t c = 0; c < f.size(); ++c)
    acc += f.x[c] * f.x[c] + f.y[c] * f.y[c] + f.z[c] * f.z[c];
  return std::sqrt(acc / static_cast<double>(f.size()));
}

inline double l2_norm(const QuatField& f) {
  double acc = 0.0;
  for (std::size_t c = 0; c < f.s.size(); ++c)
    acc += f.s.v[c] * f.s.v[c] + f.v.x[c] * f.v.x[c] + f.v.y[c] * f.v.y[c] +
           f.v.z[c] * f.v.z[c];
  return std::sqrt(acc / static_cast<double>(f.s.size()));
}

inline double linf_norm(const ScalarField& f) {
  double m = 0.0;
  for (std::size_t c = 0; c < f.size(); ++c) m = std::max(m, std::fabs(f.v[c]));
  return m;
}

inline double linf_norm(const VectorField& f) {
  double m = 0.0;
  for (std::size_t c = 0; c < f.size(); ++c) {
    m = std::max(m, std::fabs(f.x[c]));
    m = std::max(m, std::fabs(f.y[c]));
    m = std::max(m, std::fabs(f.z[c]));
  }
  return m;
}

inline double linf_norm(const QuatField& f) {
  return std::max(linf_norm(f.s), linf_norm(f.v));
}

inline double mean(const ScalarField& f) {
  double acc = 0.0;
  for (std::size_t c = 0; c < f.size(); ++c) acc += f.v[c];
  return acc / static_cast<double>(f.size());
}

inline double sum(const ScalarField& f) {
  double acc = 0.0;
  for (std::size_t c = 0; c < f.size(); ++c) acc += f.v[c];
  return acc;
}

// Integral of a*b over the volume (sum times cell volume).
inline double volume_dot(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid, b.grid);
  double acc = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) acc += a.v[c] * b.v[c];
  return acc * a.grid.cell_volume();
}

inline double volume_dot(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid, b.grid);
  double acc = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c)
    acc += a.x[c] * b.x[c] + a.y[c] * b.y[c] + a.z[c] * b.z[c];
  return acc * a.grid.cell_volume();
}

inline bool all_finite(const ScalarField& f) {
  for (std::size_t c = 0; c < f.size(); ++c)
    if (!std::isfinite(f.v[c])) return false;
  return true;
}

inline bool all_finite(const VectorField& f) {
  for (std::size_t c = 0; c < f.size(); ++c)
    if (!std::isfinite(f.x[c]) || !std::isfinite(f.y[c]) || !std::isfinite(f.z[c]))
      return false;
  return true;
}

}  // namespace qmx
