// Moment storage, projection, P1 evaluation, stencil gathering.

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "slhweno/field.hpp"
#include "slhweno/gauss.hpp"

using namespace slh;

TEST_CASE("gauss rules integrate polynomials exactly") {
  for (int n : {3, 5, 6, 13, 20}) {
    const auto& q = gauss_legendre(n);
    // exact through degree 2n-1
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += q.w[i] * std::pow(q.x[i], k);
      double exact = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
      CHECK(std::abs(s - exact) < 1e-14);
    }
    // symmetric nodes
    for (int i = 0; i < n / 2; ++i) {
      CHECK(q.x[i] == -q.x[n - 1 - i]);
      CHECK(q.w[i] == q.w[n - 1 - i]);
    }
  }
}

TEST_CASE("gll nodes are symmetric with interior points at 1/sqrt5") {
  CHECK(kGll4[0] == -1.0);
  CHECK(kGll4[3] == 1.0);
  CHECK(kGll4[1] == -kGll4[2]);
  CHECK(std::abs(kGll4[2] - 1.0 / std::sqrt(5.0)) < 1e-15);
}

TEST_CASE("projection of f(x,y) = x gives ubar = x_i, vbar = dx/12") {
  Grid g(8, 6, -1.0, 3.0, 0.0, 2.0, Bc::periodic, Bc::periodic);
  MomentField f = project_function(g, [](double x, double) { return x; });
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      CHECK(f.u(i, j) == doctest::Approx(g.center_x(i)).epsilon(1e-14));
      CHECK(f.v(i, j) == doctest::Approx(g.dx / 12.0).epsilon(1e-14));
      CHECK(std::abs(f.w(i, j)) < 1e-15);
    }
}

TEST_CASE("projection matches independent quadrature on a smooth function") {
  Grid g(5, 4, 0.0, 2.0, -1.0, 1.0, Bc::periodic, Bc::periodic);
  auto f = [](double x, double y) { return std::sin(3 * x) * std::exp(0.3 * y); };
  MomentField mf = project_function(g, f);
  // spot-check a cell against a much deeper rule
  int i = 2, j = 1;
  double u_ref = oracle::integrate_2d(f, g.face_x(i), g.face_x(i + 1),
                                      g.face_y(j), g.face_y(j + 1)) /
                 g.cell_area();
  // projection uses 5x5 Gauss which is not exact for sin/exp, so compare at
  // the quadrature-error level of the 5-point rule (~1e-12 here)
  CHECK(mf.u(i, j) == doctest::Approx(u_ref).epsilon(1e-11));

  // total mass equals the domain integral of f
  double mass_ref = oracle::integrate_2d(f, g.x_lo, g.x_hi, g.y_lo, g.y_hi);
  CHECK(total_mass(mf, g) == doctest::Approx(mass_ref).epsilon(1e-10));
}

TEST_CASE("eval_p1 matches the moment representation") {
  Moments m{0.0, 1.0 / 12.0, 0.0};
  CHECK(eval_p1(m, 0.5, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eval_p1(m, -0.5, 0.3) == doctest::Approx(-0.5).epsilon(1e-15));
}

TEST_CASE("projection then evaluation round-trips P1 data") {
  Grid g(4, 4, 0.0, 1.0, 0.0, 1.0, Bc::periodic, Bc::periodic);
  MomentField f(4, 4);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i)
      f.set(i, j, {oracle::uniform(-1, 1), oracle::uniform(-0.1, 0.1),
                   oracle::uniform(-0.1, 0.1)});
  // evaluate the P1 field pointwise, re-project, and compare moments
  auto fun = [&](double x, double y) {
    int i = std::min(g.nx - 1, g.cell_of_x(x));
    int j = std::min(g.ny - 1, g.cell_of_y(y));
    return eval_p1(f, g, i, j, x, y);
  };
  MomentField f2 = project_function(g, fun);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) {
      CHECK(f2.u(i, j) == doctest::Approx(f.u(i, j)).epsilon(1e-14));
      CHECK(f2.v(i, j) == doctest::Approx(f.v(i, j)).epsilon(1e-14));
      CHECK(f2.w(i, j) == doctest::Approx(f.w(i, j)).epsilon(1e-14));
    }
}

TEST_CASE("stencil gathering wraps periodic axes and zeroes outside") {
  Grid gp(3, 3, 0, 3, 0, 3, Bc::periodic, Bc::periodic);
  MomentField f(3, 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) f.u(i, j) = 10.0 * i + j;

  Stencil3x3 s = gather_stencil(f, gp, 0, 0);
  CHECK(s.at(-1, -1).u == 22.0);  // wraps to (2,2)
  CHECK(s.at(0, 0).u == 0.0);
  CHECK(s.at(1, 1).u == 11.0);

  Grid gz(3, 3, 0, 3, 0, 3, Bc::zero_extension, Bc::zero_extension);
  Stencil3x3 sz = gather_stencil(f, gz, 0, 0);
  CHECK(sz.at(-1, -1).u == 0.0);
  CHECK(sz.at(-1, 0).u == 0.0);
  CHECK(sz.at(1, 0).u == 10.0);

  // mixed: x periodic, y clipped
  Grid gm(3, 3, 0, 3, 0, 3, Bc::periodic, Bc::zero_extension);
  Stencil3x3 sm = gather_stencil(f, gm, 0, 0);
  CHECK(sm.at(-1, 0).u == 20.0);  // x wraps
  CHECK(sm.at(0, -1).u == 0.0);   // y outside
}

TEST_CASE("projection rejects non-finite data naming the cell") {
  Grid g(2, 2, 0, 1, 0, 1, Bc::periodic, Bc::periodic);
  auto bad = [](double x, double y) {
    return (x > 0.5 && y > 0.5) ? std::nan("") : 1.0;
  };
  CHECK_THROWS_WITH_AS(project_function(g, bad),
                       doctest::Contains("cell (1,1)"), std::runtime_error);
}
