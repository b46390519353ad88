#pragma once

#include <array>
#include <vector>

// Gauss-Legendre quadrature on [-1,1] plus the 4-point Gauss-Lobatto nodes
// used to seed characteristic feet.  Rules are generated once by Newton
// iteration on the Legendre polynomial; nodes converge to ~1 ulp so the
// rules are exact for polynomials of degree 2n-1 up to roundoff.

namespace slh {

struct QuadRule {
  std::vector<double> x;  // nodes in (-1,1), ascending
  std::vector<double> w;  // weights, sum = 2
};

// n-point Gauss-Legendre rule (exact through degree 2n-1).
const QuadRule& gauss_legendre(int n);

// 4-point Gauss-Lobatto nodes on [-1,1]: {-1, -1/sqrt5, 1/sqrt5, 1}.
// Endpoints included by construction so adjacent cells share corner seeds.
inline constexpr std::array<double, 4> kGll4 = {
    -1.0, -0.4472135954999579393, 0.4472135954999579393, 1.0};

// Evaluate Legendre P_n and its derivative at x (used by the generator and
// by tests that want an independent polynomial basis).
void legendre_eval(int n, double x, double& p, double& dp);

}  // namespace slh
