#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

// Cell-local polynomial space used by the reconstruction.  Basis functions
// are orthogonal over the unit cell [-1/2,1/2]^2 in (mu,nu):
//   B0  = 1
//   B1  = mu
//   B2  = nu
//   B3  = mu^2 - 1/12
//   B4  = mu*nu
//   B5  = nu^2 - 1/12
//   B6  = mu^3 - (3/20) mu
//   B7  = (mu^2 - 1/12) nu
//   B8  = mu (nu^2 - 1/12)
//   B9  = nu^3 - (3/20) nu
//   B10 = (mu^2 - 1/12)(nu^2 - 1/12)
// Reconstructed solutions drop B10 (total degree <= 3); the slot exists so
// the full 11-condition interpolation problem can be expressed.

namespace slh {

struct CubicPoly {
  std::array<double, 11> a{};  // coefficients against B0..B10

  double eval(double mu, double nu) const {
    double mu2 = mu * mu, nu2 = nu * nu;
    double p4 = mu2 - 1.0 / 12.0, p6 = nu2 - 1.0 / 12.0;
    return a[0] + a[1] * mu + a[2] * nu + a[3] * p4 + a[4] * mu * nu +
           a[5] * p6 + a[6] * (mu2 * mu - 0.15 * mu) + a[7] * p4 * nu +
           a[8] * mu * p6 + a[9] * (nu2 * nu - 0.15 * nu) + a[10] * p4 * p6;
  }

  // Cell moments of the polynomial (basis orthogonality makes these trivial).
  double average() const { return a[0]; }
  double moment_mu() const { return a[1] / 12.0; }
  double moment_nu() const { return a[2] / 12.0; }
};

// Monomial coefficients in graded order
//   1, mu, nu, mu^2, mu*nu, nu^2, mu^3, mu^2 nu, mu nu^2, nu^3.
// Requires a10 == 0 (total degree <= 3); the integrator depends on that.
inline std::array<double, 10> to_monomial(const CubicPoly& p) {
  if (p.a[10] != 0.0)
    throw std::logic_error("to_monomial: degree-4 coefficient must be zero");
  std::array<double, 10> c{};
  c[0] = p.a[0] - p.a[3] / 12.0 - p.a[5] / 12.0;
  c[1] = p.a[1] - 0.15 * p.a[6] - p.a[8] / 12.0;
  c[2] = p.a[2] - p.a[7] / 12.0 - 0.15 * p.a[9];
  c[3] = p.a[3];
  c[4] = p.a[4];
  c[5] = p.a[5];
  c[6] = p.a[6];
  c[7] = p.a[7];
  c[8] = p.a[8];
  c[9] = p.a[9];
  return c;
}

}  // namespace slh
