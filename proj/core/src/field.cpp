#include "slhweno/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "slhweno/gauss.hpp"

namespace slh {

double eval_p1(const MomentField& f, const Grid& g, int i, int j, double x,
               double y) {
  double mu = (x - g.center_x(i)) / g.dx;
  double nu = (y - g.center_y(j)) / g.dy;
  return eval_p1(f.at(i, j), mu, nu);
}

MomentField project_function(const Grid& g,
                             const std::function<double(double, double)>& f,
                             int quad_n) {
  const QuadRule& q = gauss_legendre(quad_n);
  MomentField out(g.nx, g.ny);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      double su = 0, sv = 0, sw = 0;
      for (int b = 0; b < quad_n; ++b) {
        double nu = 0.5 * q.x[b];  // cell-local in [-1/2, 1/2]
        double y = g.center_y(j) + nu * g.dy;
        for (int a = 0; a < quad_n; ++a) {
          double mu = 0.5 * q.x[a];
          double x = g.center_x(i) + mu * g.dx;
          double val = f(x, y);
          if (!std::isfinite(val))
            throw std::runtime_error("project_function: non-finite value in cell (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
          double ww = 0.25 * q.w[a] * q.w[b];  // tensor weight over unit cell
          su += ww * val;
          sv += ww * val * mu;
          sw += ww * val * nu;
        }
      }
      out.u(i, j) = su;
      out.v(i, j) = sv;
      out.w(i, j) = sw;
    }
  }
  return out;
}

Stencil3x3 gather_stencil(const MomentField& f, const Grid& g, int i, int j) {
  Stencil3x3 s;
  for (int dj = -1; dj <= 1; ++dj) {
    for (int di = -1; di <= 1; ++di) {
      auto cell = g.resolve(i + di, j + dj);
      s.m[(dj + 1) * 3 + (di + 1)] =
          cell ? f.at(cell->first, cell->second) : Moments{};
    }
  }
  return s;
}

double total_mass(const MomentField& f, const Grid& g) {
  double s = 0;
  for (size_t k = 0; k < f.ubar.size(); ++k) s += f.ubar[k];
  return s * g.cell_area();
}

}  // namespace slh
