#pragma once

// Shared test oracles: independent quadrature and small helpers.  These
// deliberately avoid the library's own integration paths so that agreement
// between the two is meaningful.

#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "slhweno/gauss.hpp"

namespace oracle {

// n-point Gauss-Legendre integral of f over [a,b].
inline double integrate_1d(const std::function<double(double)>& f, double a,
                           double b, int n = 20) {
  const auto& q = slh::gauss_legendre(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0;
  for (int k = 0; k < n; ++k) s += q.w[k] * f(mid + half * q.x[k]);
  return s * half;
}

// Tensor-product Gauss integral of f over [ax,bx] x [ay,by].
inline double integrate_2d(const std::function<double(double, double)>& f,
                           double ax, double bx, double ay, double by,
                           int n = 20) {
  const auto& q = slh::gauss_legendre(n);
  double mx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
  double my = 0.5 * (ay + by), hy = 0.5 * (by - ay);
  double s = 0;
  for (int b = 0; b < n; ++b) {
    double y = my + hy * q.x[b];
    double row = 0;
    for (int a = 0; a < n; ++a) row += q.w[a] * f(mx + hx * q.x[a], y);
    s += q.w[b] * row;
  }
  return s * hx * hy;
}

// Deterministic RNG for property tests.
inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng());
}

}  // namespace oracle
