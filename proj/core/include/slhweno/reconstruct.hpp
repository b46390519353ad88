#pragma once

#include <array>
#include <vector>

#include "slhweno/basis.hpp"
#include "slhweno/field.hpp"
#include "slhweno/grid.hpp"

// Hermite-type reconstruction: each cell's P1 moments plus the 3x3
// neighborhood of cell averages are lifted to a cubic polynomial per cell.
// Step 1 reconstructs the first moments direction by direction from
// (averages, first moments) triples; step 2 builds the cubic from the nine
// averages and the reconstructed moments.  Three variants share the
// candidate polynomials:
//   linear  - the large-stencil polynomial itself (no nonlinearity)
//   hweno1  - blend of the large polynomial and four corner candidates with
//             nonlinear weights around linear weights gamma
//   hweno2  - pick either the large polynomial or the single best corner
//             candidate, chosen by normalized smoothness ratios against a
//             fixed cutoff

namespace slh {

enum class ReconScheme { linear, hweno1, hweno2 };

struct ReconConfig {
  ReconScheme scheme = ReconScheme::hweno1;
  // 1-D linear weights for candidates {large, left, right}.
  double gamma1d_0 = 0.6, gamma1d_1 = 0.2, gamma1d_3 = 0.2;
  // 2-D linear weights: gamma2d_0 for the large polynomial, gamma2d_k for
  // each of the four corner candidates.
  double gamma2d_0 = 0.6, gamma2d_k = 0.1;
  double eps = 1e-40;     // smoothness regularization
  double cutoff = 1e-3;   // hweno2 selection threshold
  int power = 6;          // hweno2 separation exponent
};

// ---------------------------------------------------------------------------
// Step 1: first-moment reconstruction along one direction.
//
// ub = cell averages (left, center, right), vb = first moments (left, right).
// All quantities are in the scaled coordinate of the center cell, so the
// same routine serves both directions.
struct Recon1d {
  double vtilde = 0;             // reconstructed center first moment
  std::array<double, 4> beta{};  // smoothness of candidates 0..3
  double tau = 0;                // global smoothness contrast
  int choice = -1;               // hweno2: 0 large, 1 left, 3 right; else -1
};

Recon1d reconstruct_moment_1d(const std::array<double, 3>& ub,
                              const std::array<double, 2>& vb,
                              const ReconConfig& cfg);

// Candidate first moments and the quartic smoothness form, exposed so tests
// can check them against definitional quadrature.
std::array<double, 4> candidate_moments_1d(const std::array<double, 3>& ub,
                                           const std::array<double, 2>& vb);
// beta of the quartic candidate as a quadratic form in
// (ub_l, ub_c, ub_r, vb_l, vb_r); derived once from the interpolation
// conditions (see reconstruct.cpp for the derivation).
double beta0_quartic(const std::array<double, 3>& ub,
                     const std::array<double, 2>& vb);
// Coefficients (constant, s, s^2, s^3, s^4) of the quartic candidate in the
// scaled coordinate s of the center cell; used by tests/oracles.
std::array<double, 5> quartic_coeffs_1d(const std::array<double, 3>& ub,
                                        const std::array<double, 2>& vb);

// ---------------------------------------------------------------------------
// Step 2: cell cubic from 3x3 averages plus reconstructed moments.
struct Recon2d {
  CubicPoly h;                       // total degree <= 3 (a10 = 0)
  std::array<double, 5> beta_hat{};  // candidate smoothness 0..4
  double tau_hat = 0;
  std::array<double, 5> weight{};    // hweno1 normalized weights
  int choice = -1;                   // hweno2 selected candidate; else -1
};

Recon2d reconstruct_cell(const std::array<double, 9>& ub, double vt, double wt,
                         const ReconConfig& cfg);

// Full 11-coefficient interpolant (including the degree-4 slot) obtained
// from the frozen inverse of the condition system; used by debug checks and
// tests to validate the closed-form coefficients above.
CubicPoly interpolate_q0_full(const std::array<double, 9>& ub, double vt,
                              double wt);

// ---------------------------------------------------------------------------
// Whole-field reconstruction.
struct ReconField {
  int nx = 0, ny = 0;
  std::vector<CubicPoly> h;
  std::vector<double> vt, wt;  // reconstructed first moments per cell

  const CubicPoly& at(int i, int j) const { return h[(size_t)j * nx + i]; }
};

ReconField reconstruct_field(const MomentField& f, const Grid& g,
                             const ReconConfig& cfg, unsigned nthreads = 1);

// Background lookup for upstream integration: wraps periodic axes, returns
// the zero polynomial outside zero-extension axes.
CubicPoly background_poly(const ReconField& r, const Grid& g, int p, int q);

}  // namespace slh
