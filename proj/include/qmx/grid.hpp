#pragma once

// Uniform periodic grid. Each axis is either fully resolved (n >= 4, wide
// enough for a centered stencil) or degenerate (n == 1, derivatives along it
// vanish); this is how 1-D and 2-D runs are expressed. Storage over the grid
// is x-fastest: flat index = (k*ny + j)*nx + i.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmx {

struct Grid {
  int nx = 1, ny = 1, nz = 1;
  double dx = 1.0, dy = 1.0, dz = 1.0;

  std::size_t cells() const {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
           static_cast<std::size_t>(nz);
  }
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(k) * ny + j) * nx + i;
  }
  double cell_volume() const { return dx * dy * dz; }
  double min_spacing() const {
    double m = dx;
    if (dy < m) m = dy;
    if (dz < m) m = dz;
    return m;
  }
  double length_x() const { return nx * dx; }
  double length_y() const { return ny * dy; }
  double length_z() const { return nz * dz; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

inline Grid make_grid(int nx, int ny, int nz, double dx, double dy, double dz) {
  auto check_n = [](int n, const char* name) {
    if (n != 1 && n < 4)
      throw std::invalid_argument(std::string("grid: ") + name +
                                  " must be 1 (degenerate axis) or >= 4, got " +
                                  std::to_string(n));
  };
  auto check_d = [](double d, const char* name) {
    if (!(d > 0.0))
      throw std::invalid_argument(std::string("grid: ") + name + " must be > 0");
  };
  check_n(nx, "nx");
  check_n(ny, "ny");
  check_n(nz, "nz");
  check_d(dx, "dx");
  check_d(dy, "dy");
  check_d(dz, "dz");
  return Grid{nx, ny, nz, dx, dy, dz};
}

}  // namespace qmx
