#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

// Uniform Cartesian mesh on [x_lo,x_hi] x [y_lo,y_hi].  Cells are indexed
// 0..nx-1, 0..ny-1; cell (i,j) spans [face_x(i), face_x(i+1)] x
// [face_y(j), face_y(j+1)].  Face/center coordinates accept any integer
// index: upstream geometry works on the unwrapped lattice and only the
// data lookup wraps (periodic) or falls outside (zero extension).

namespace slh {

enum class Bc { periodic, zero_extension };

struct Grid {
  int nx = 0, ny = 0;
  double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
  Bc bc_x = Bc::periodic, bc_y = Bc::periodic;
  double dx = 0, dy = 0;

  Grid() = default;
  Grid(int nx_, int ny_, double x_lo_, double x_hi_, double y_lo_, double y_hi_,
       Bc bcx, Bc bcy)
      : nx(nx_), ny(ny_), x_lo(x_lo_), x_hi(x_hi_), y_lo(y_lo_), y_hi(y_hi_),
        bc_x(bcx), bc_y(bcy) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("Grid: nx, ny must be >= 1");
    if (!(x_hi > x_lo) || !(y_hi > y_lo))
      throw std::invalid_argument("Grid: empty domain");
    dx = (x_hi - x_lo) / nx;
    dy = (y_hi - y_lo) / ny;
  }

  double lx() const { return x_hi - x_lo; }
  double ly() const { return y_hi - y_lo; }
  double cell_area() const { return dx * dy; }

  // Lattice coordinates, valid for any integer index (unwrapped).
  double face_x(int i) const { return x_lo + i * dx; }
  double face_y(int j) const { return y_lo + j * dy; }
  double center_x(int i) const { return x_lo + (i + 0.5) * dx; }
  double center_y(int j) const { return y_lo + (j + 0.5) * dy; }

  // Lattice cell containing x (unwrapped; may be negative or >= nx).
  int cell_of_x(double x) const { return (int)std::floor((x - x_lo) / dx); }
  int cell_of_y(double y) const { return (int)std::floor((y - y_lo) / dy); }

  static int wrap(int i, int n) {
    int r = i % n;
    return r < 0 ? r + n : r;
  }

  // Map an unwrapped lattice cell to a stored cell.  nullopt means the cell
  // lies outside a zero-extension axis, i.e. the solution there is 0.
  std::optional<std::pair<int, int>> resolve(int p, int q) const {
    if (bc_x == Bc::periodic) {
      p = wrap(p, nx);
    } else if (p < 0 || p >= nx) {
      return std::nullopt;
    }
    if (bc_y == Bc::periodic) {
      q = wrap(q, ny);
    } else if (q < 0 || q >= ny) {
      return std::nullopt;
    }
    return std::make_pair(p, q);
  }
};

}  // namespace slh
