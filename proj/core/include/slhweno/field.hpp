#pragma once

#include <array>
#include <functional>
#include <vector>

#include "slhweno/grid.hpp"

// Cell-moment storage for the P1 solution representation
//   u(x,y) = ubar + 12*vbar*mu + 12*wbar*nu,
//   mu = (x - x_i)/dx, nu = (y - y_j)/dy   (cell-local, in [-1/2, 1/2])
// where ubar is the cell average and vbar/wbar the first moments of u
// against mu/nu.  All three are what the solver advances in time.

namespace slh {

struct Moments {
  double u = 0, v = 0, w = 0;
};

struct MomentField {
  int nx = 0, ny = 0;
  std::vector<double> ubar, vbar, wbar;

  MomentField() = default;
  MomentField(int nx_, int ny_)
      : nx(nx_), ny(ny_),
        ubar((size_t)nx_ * ny_, 0.0),
        vbar((size_t)nx_ * ny_, 0.0),
        wbar((size_t)nx_ * ny_, 0.0) {}

  size_t idx(int i, int j) const { return (size_t)j * nx + i; }
  double& u(int i, int j) { return ubar[idx(i, j)]; }
  double& v(int i, int j) { return vbar[idx(i, j)]; }
  double& w(int i, int j) { return wbar[idx(i, j)]; }
  double u(int i, int j) const { return ubar[idx(i, j)]; }
  double v(int i, int j) const { return vbar[idx(i, j)]; }
  double w(int i, int j) const { return wbar[idx(i, j)]; }
  Moments at(int i, int j) const { return {u(i, j), v(i, j), w(i, j)}; }
  void set(int i, int j, const Moments& m) {
    u(i, j) = m.u;
    v(i, j) = m.v;
    w(i, j) = m.w;
  }
};

// P1 evaluation at cell-local coordinates.
inline double eval_p1(const Moments& m, double mu, double nu) {
  return m.u + 12.0 * m.v * mu + 12.0 * m.w * nu;
}

// P1 evaluation at a physical point known to lie in cell (i,j).
double eval_p1(const MomentField& f, const Grid& g, int i, int j, double x,
               double y);

// L2-project a pointwise function onto the moment representation using an
// n x n tensor Gauss-Legendre rule per cell (default 5x5: exact through
// degree 9, far beyond the P1 target; the projection error is then purely
// the distance of f from P1).  Throws if f returns a non-finite value.
MomentField project_function(const Grid& g,
                             const std::function<double(double, double)>& f,
                             int quad_n = 5);

// 3x3 neighborhood in serial order s = 0..8:
//   6 7 8        (j+1)
//   3 4 5        (j)
//   0 1 2        (j-1)
// with s = 4 the center cell.  Periodic axes wrap; zero-extension axes
// produce zero moments outside the domain.
struct Stencil3x3 {
  std::array<Moments, 9> m;
  const Moments& at(int di, int dj) const { return m[(dj + 1) * 3 + (di + 1)]; }
};

Stencil3x3 gather_stencil(const MomentField& f, const Grid& g, int i, int j);

// Total integral of the P1 field over the domain (= sum of ubar * cell area;
// fixed summation order so results are reproducible across thread counts).
double total_mass(const MomentField& f, const Grid& g);

}  // namespace slh
