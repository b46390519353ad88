#include "slhweno/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "slhweno/parallel.hpp"

namespace slh {

namespace {

// --------------------------------------------------------------------------
// Tiny dense Gauss-Jordan inverse with partial pivoting.  Used once at
// startup to freeze the interpolation matrices; never in per-cell code.
template <int N>
std::array<std::array<double, N>, N> invert(
    std::array<std::array<double, N>, N> a) {
  std::array<std::array<double, N>, N> inv{};
  for (int i = 0; i < N; ++i) inv[i][i] = 1.0;
  for (int col = 0; col < N; ++col) {
    int piv = col;
    for (int r = col + 1; r < N; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0)
      throw std::logic_error("reconstruct: singular interpolation system");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    double d = 1.0 / a[col][col];
    for (int c = 0; c < N; ++c) {
      a[col][c] *= d;
      inv[col][c] *= d;
    }
    for (int r = 0; r < N; ++r) {
      if (r == col) continue;
      double f = a[r][col];
      if (f == 0.0) continue;
      for (int c = 0; c < N; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

// integral of s^k over [lo,hi]
double ipow(double lo, double hi, int k) {
  return (std::pow(hi, k + 1) - std::pow(lo, k + 1)) / (k + 1);
}

// --------------------------------------------------------------------------
// Quartic candidate: p(s) = sum c_m s^m on the scaled coordinate of the
// center cell, fixed by
//   avg over [l-1/2, l+1/2] = ub[l+1],  l = -1,0,1
//   first moment over [l-1/2, l+1/2] (around s=l) = vb,  l = -1,1.
// The condition matrix is constant, so its inverse is frozen once; the
// published closed forms for vtilde fall out of it and are asserted in
// tests.  The smoothness of the quartic,
//   beta0 = sum_{l=1..4} int_{-1/2}^{1/2} (d^l p / ds^l)^2 ds,
// is then a quadratic form m^T Q0 m in the data vector
//   m = (ub_l, ub_c, ub_r, vb_l, vb_r),
// with Q0 = Minv^T (sum_l D_l^T G_l D_l) Minv frozen alongside.
struct QuarticTables {
  std::array<std::array<double, 5>, 5> minv{};  // data -> monomial coeffs
  std::array<std::array<double, 5>, 5> q0{};    // beta0 quadratic form
};

const QuarticTables& quartic_tables() {
  static const QuarticTables t = [] {
    std::array<std::array<double, 5>, 5> m{};
    for (int row = 0; row < 3; ++row) {  // averages at l = -1, 0, 1
      int l = row - 1;
      for (int k = 0; k < 5; ++k) m[row][k] = ipow(l - 0.5, l + 0.5, k);
    }
    for (int row = 3; row < 5; ++row) {  // first moments at l = -1, +1
      int l = row == 3 ? -1 : 1;
      for (int k = 0; k < 5; ++k)
        m[row][k] = ipow(l - 0.5, l + 0.5, k + 1) - l * ipow(l - 0.5, l + 0.5, k);
    }
    QuarticTables t;
    t.minv = invert<5>(m);

    // B[m][n] = sum_l  int (d^l s^m)(d^l s^n) ds  over the center cell.
    std::array<std::array<double, 5>, 5> b{};
    for (int l = 1; l <= 4; ++l) {
      for (int mm = l; mm < 5; ++mm) {
        double fm = 1.0;
        for (int k = 0; k < l; ++k) fm *= (mm - k);
        for (int nn = l; nn < 5; ++nn) {
          double fn = 1.0;
          for (int k = 0; k < l; ++k) fn *= (nn - k);
          b[mm][nn] += fm * fn * ipow(-0.5, 0.5, (mm - l) + (nn - l));
        }
      }
    }
    for (int r = 0; r < 5; ++r)
      for (int c = 0; c < 5; ++c) {
        double s = 0;
        for (int mm = 0; mm < 5; ++mm)
          for (int nn = 0; nn < 5; ++nn)
            s += t.minv[mm][r] * b[mm][nn] * t.minv[nn][c];
        t.q0[r][c] = s;
      }
    return t;
  }();
  return t;
}

// --------------------------------------------------------------------------
// Frozen inverse of the 11-condition 2-D interpolation system: nine cell
// averages over the 3x3 block plus the two center first moments, against
// basis B0..B10.  Only tests and debug checks solve through this; per-cell
// code uses the closed forms below.
struct Q0FullTable {
  std::array<std::array<double, 11>, 11> minv{};
};

// average of mu^p nu^q over block cell (di,dj), unit spacing
double block_avg(int di, int dj, int p, int q) {
  return ipow(di - 0.5, di + 0.5, p) * ipow(dj - 0.5, dj + 0.5, q);
}

const Q0FullTable& q0_full_table() {
  static const Q0FullTable t = [] {
    // monomial expansion of each basis function: list of (coef, p, q)
    struct Term {
      double c;
      int p, q;
    };
    const std::vector<std::vector<Term>> basis = {
        {{1, 0, 0}},
        {{1, 1, 0}},
        {{1, 0, 1}},
        {{1, 2, 0}, {-1.0 / 12.0, 0, 0}},
        {{1, 1, 1}},
        {{1, 0, 2}, {-1.0 / 12.0, 0, 0}},
        {{1, 3, 0}, {-0.15, 1, 0}},
        {{1, 2, 1}, {-1.0 / 12.0, 0, 1}},
        {{1, 1, 2}, {-1.0 / 12.0, 1, 0}},
        {{1, 0, 3}, {-0.15, 0, 1}},
        {{1, 2, 2}, {-1.0 / 12.0, 2, 0}, {-1.0 / 12.0, 0, 2}, {1.0 / 144.0, 0, 0}},
    };
    std::array<std::array<double, 11>, 11> m{};
    int row = 0;
    for (int dj = -1; dj <= 1; ++dj)
      for (int di = -1; di <= 1; ++di, ++row)
        for (int l = 0; l < 11; ++l)
          for (const Term& tm : basis[l])
            m[row][l] += tm.c * block_avg(di, dj, tm.p, tm.q);
    for (int l = 0; l < 11; ++l) {  // center first moments
      for (const Term& tm : basis[l]) {
        m[9][l] += tm.c * block_avg(0, 0, tm.p + 1, tm.q);
        m[10][l] += tm.c * block_avg(0, 0, tm.p, tm.q + 1);
      }
    }
    Q0FullTable t;
    t.minv = invert<11>(m);
    return t;
  }();
  return t;
}

// --------------------------------------------------------------------------
// Closed-form coefficients of the large 2-D polynomial (degree-4 slot
// dropped) and of the four corner candidates.  ub is in serial order
//   6 7 8
//   3 4 5
//   0 1 2
void q0_coeffs(const std::array<double, 9>& u, double vt, double wt,
               double a[11]) {
  a[0] = u[4];
  a[1] = 12.0 * vt;
  a[2] = 12.0 * wt;
  a[3] = 0.5 * u[3] - u[4] + 0.5 * u[5];
  a[4] = 0.25 * (u[0] - u[2] - u[6] + u[8]);
  a[5] = 0.5 * u[1] - u[4] + 0.5 * u[7];
  a[6] = (5.0 / 11.0) * (u[5] - u[3]) - (120.0 / 11.0) * vt;
  a[7] = 0.25 * (-u[0] - u[2] + u[6] + u[8]) + 0.5 * (u[1] - u[7]);
  a[8] = 0.25 * (-u[0] + u[2] - u[6] + u[8]) + 0.5 * (u[3] - u[5]);
  a[9] = (5.0 / 11.0) * (u[7] - u[1]) - (120.0 / 11.0) * wt;
  a[10] = 0.0;
}

// Corner candidate k in {1,2,3,4}; quadratic (coefficients against B0..B5).
void qk_coeffs(int k, const std::array<double, 9>& u, double vt, double wt,
               double a[6]) {
  a[0] = u[4];
  a[1] = 12.0 * vt;
  a[2] = 12.0 * wt;
  switch (k) {
    case 1:  // lower-left 2x2
      a[3] = u[3] - u[4] + 12.0 * vt;
      a[4] = u[0] - u[1] - u[3] + u[4];
      a[5] = u[1] - u[4] + 12.0 * wt;
      break;
    case 2:  // lower-right
      a[3] = -u[4] + u[5] - 12.0 * vt;
      a[4] = u[1] - u[2] - u[4] + u[5];
      a[5] = u[1] - u[4] + 12.0 * wt;
      break;
    case 3:  // upper-left
      a[3] = u[3] - u[4] + 12.0 * vt;
      a[4] = u[3] - u[4] - u[6] + u[7];
      a[5] = -u[4] + u[7] - 12.0 * wt;
      break;
    case 4:  // upper-right
      a[3] = -u[4] + u[5] - 12.0 * vt;
      a[4] = u[4] - u[5] - u[7] + u[8];
      a[5] = -u[4] + u[7] - 12.0 * wt;
      break;
    default:
      throw std::logic_error("qk_coeffs: bad candidate index");
  }
}

double sq(double x) { return x * x; }

}  // namespace

// --------------------------------------------------------------------------
// 1-D step

std::array<double, 4> candidate_moments_1d(const std::array<double, 3>& ub,
                                           const std::array<double, 2>& vb) {
  std::array<double, 4> v{};
  v[0] = (5.0 / 76.0) * (ub[2] - ub[0]) - (11.0 / 38.0) * (vb[0] + vb[1]);
  v[1] = (ub[1] - ub[0]) / 6.0 - vb[0];
  v[2] = (ub[2] - ub[0]) / 24.0;
  v[3] = (ub[2] - ub[1]) / 6.0 - vb[1];
  return v;
}

std::array<double, 5> quartic_coeffs_1d(const std::array<double, 3>& ub,
                                        const std::array<double, 2>& vb) {
  const auto& t = quartic_tables();
  std::array<double, 5> m = {ub[0], ub[1], ub[2], vb[0], vb[1]};
  std::array<double, 5> c{};
  for (int r = 0; r < 5; ++r)
    for (int k = 0; k < 5; ++k) c[r] += t.minv[r][k] * m[k];
  return c;
}

double beta0_quartic(const std::array<double, 3>& ub,
                     const std::array<double, 2>& vb) {
  const auto& t = quartic_tables();
  std::array<double, 5> m = {ub[0], ub[1], ub[2], vb[0], vb[1]};
  double s = 0;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) s += m[r] * t.q0[r][c] * m[c];
  return s;
}

Recon1d reconstruct_moment_1d(const std::array<double, 3>& ub,
                              const std::array<double, 2>& vb,
                              const ReconConfig& cfg) {
  Recon1d out;
  auto v = candidate_moments_1d(ub, vb);
  out.beta[0] = beta0_quartic(ub, vb);
  out.beta[1] = sq(12.0 * v[1]) + 156.0 * sq(v[1] - vb[0]);
  out.beta[2] = sq(12.0 * v[2]) + (13.0 / 12.0) * sq(ub[2] - 2.0 * ub[1] + ub[0]);
  out.beta[3] = sq(12.0 * v[3]) + 156.0 * sq(vb[1] - v[3]);
  out.tau = sq(0.5 * (std::abs(out.beta[0] - out.beta[1]) +
                      std::abs(out.beta[0] - out.beta[3])));

  switch (cfg.scheme) {
    case ReconScheme::linear:
      out.vtilde = v[0];
      break;
    case ReconScheme::hweno1: {
      double g0 = cfg.gamma1d_0, g1 = cfg.gamma1d_1, g3 = cfg.gamma1d_3;
      double w0 = g0 * (1.0 + out.tau / (out.beta[0] + cfg.eps));
      double w1 = g1 * (1.0 + out.tau / (out.beta[1] + cfg.eps));
      double w3 = g3 * (1.0 + out.tau / (out.beta[3] + cfg.eps));
      double s = w0 + w1 + w3;
      w0 /= s;
      w1 /= s;
      w3 /= s;
      out.vtilde = (w0 / g0) * (v[0] - g1 * v[1] - g3 * v[3]) + w1 * v[1] +
                   w3 * v[3];
      break;
    }
    case ReconScheme::hweno2: {
      double e1 = std::pow(1.0 + out.tau / (out.beta[1] + cfg.eps), cfg.power);
      double e2 = std::pow(1.0 + out.tau / (out.beta[2] + cfg.eps), cfg.power);
      double e3 = std::pow(1.0 + out.tau / (out.beta[3] + cfg.eps), cfg.power);
      double s = e1 + e2 + e3;
      double k1 = e1 / s, k2 = e2 / s, k3 = e3 / s;
      if (std::min(k1, std::min(k2, k3)) > cfg.cutoff) {
        out.vtilde = v[0];
        out.choice = 0;
      } else if (k1 >= k3) {  // tie goes to the lower index
        out.vtilde = v[1];
        out.choice = 1;
      } else {
        out.vtilde = v[3];
        out.choice = 3;
      }
      break;
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// 2-D step

CubicPoly interpolate_q0_full(const std::array<double, 9>& ub, double vt,
                              double wt) {
  const auto& t = q0_full_table();
  std::array<double, 11> m{};
  for (int s = 0; s < 9; ++s) m[s] = ub[s];
  m[9] = vt;
  m[10] = wt;
  CubicPoly p;
  for (int r = 0; r < 11; ++r) {
    double s = 0;
    for (int k = 0; k < 11; ++k) s += t.minv[r][k] * m[k];
    p.a[r] = s;
  }
  return p;
}

Recon2d reconstruct_cell(const std::array<double, 9>& ub, double vt, double wt,
                         const ReconConfig& cfg) {
  Recon2d out;
  double a0[11];
  q0_coeffs(ub, vt, wt, a0);
#ifndef NDEBUG
  {
    // The closed forms must agree with the frozen 11-condition solve.
    CubicPoly full = interpolate_q0_full(ub, vt, wt);
    double scale = 1.0;
    for (double x : ub) scale = std::max(scale, std::abs(x));
    for (int l = 0; l < 10; ++l)
      if (std::abs(full.a[l] - a0[l]) > 1e-10 * scale)
        throw std::logic_error("reconstruct_cell: closed-form coefficients drifted");
  }
#endif
  double qk[4][6];
  for (int k = 1; k <= 4; ++k) qk_coeffs(k, ub, vt, wt, qk[k - 1]);

  out.beta_hat[0] = sq(a0[1] + a0[6] / 10.0) + sq(a0[2] + a0[9] / 10.0) +
                    (13.0 / 3.0) * sq(a0[3]) + (7.0 / 6.0) * sq(a0[4]) +
                    (13.0 / 3.0) * sq(a0[5]) + (781.0 / 20.0) * sq(a0[6]) +
                    (47.0 / 10.0) * sq(a0[7]) + (47.0 / 10.0) * sq(a0[8]) +
                    (781.0 / 20.0) * sq(a0[9]);
  for (int k = 1; k <= 4; ++k) {
    const double* b = qk[k - 1];
    out.beta_hat[k] = sq(b[1]) + sq(b[2]) + (13.0 / 3.0) * sq(b[3]) +
                      (7.0 / 6.0) * sq(b[4]) + (13.0 / 3.0) * sq(b[5]);
  }
  double acc = 0;
  for (int k = 1; k <= 4; ++k) acc += std::abs(out.beta_hat[0] - out.beta_hat[k]);
  out.tau_hat = sq(acc / 4.0);

  auto assign_q0 = [&] {
    for (int l = 0; l < 11; ++l) out.h.a[l] = a0[l];
  };
  auto assign_qk = [&](int k) {
    out.h = CubicPoly{};
    for (int l = 0; l < 6; ++l) out.h.a[l] = qk[k - 1][l];
  };

  switch (cfg.scheme) {
    case ReconScheme::linear:
      assign_q0();
      break;
    case ReconScheme::hweno1: {
      double g0 = cfg.gamma2d_0, gk = cfg.gamma2d_k;
      double w[5];
      w[0] = g0 * (1.0 + out.tau_hat / (out.beta_hat[0] + cfg.eps));
      double s = w[0];
      for (int k = 1; k <= 4; ++k) {
        w[k] = gk * (1.0 + out.tau_hat / (out.beta_hat[k] + cfg.eps));
        s += w[k];
      }
      for (int k = 0; k <= 4; ++k) {
        w[k] /= s;
        out.weight[k] = w[k];
      }
      double r0 = w[0] / g0;
      out.h = CubicPoly{};
      out.h.a[0] = ub[4];
      out.h.a[1] = 12.0 * vt;
      out.h.a[2] = 12.0 * wt;
      for (int l = 3; l <= 5; ++l) {
        double v = r0 * a0[l];
        for (int k = 1; k <= 4; ++k) v += (w[k] - r0 * gk) * qk[k - 1][l];
        out.h.a[l] = v;
      }
      for (int l = 6; l <= 9; ++l) out.h.a[l] = r0 * a0[l];
      break;
    }
    case ReconScheme::hweno2: {
      double eta[5], s = 0;
      for (int k = 1; k <= 4; ++k) {
        eta[k] = std::pow(1.0 + out.tau_hat / (out.beta_hat[k] + cfg.eps),
                          cfg.power);
        s += eta[k];
      }
      double kap[5];
      for (int k = 1; k <= 4; ++k) {
        kap[k] = eta[k] / s;
        out.weight[k] = kap[k];
      }
      double kmin = kap[1];
      int kmax = 1;
      for (int k = 2; k <= 4; ++k) {
        kmin = std::min(kmin, kap[k]);
        if (kap[k] > kap[kmax]) kmax = k;  // strict > keeps ties at lowest index
      }
      if (kmin > cfg.cutoff) {
        assign_q0();
        out.choice = 0;
      } else {
        assign_qk(kmax);
        out.choice = kmax;
      }
      break;
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// Whole field

ReconField reconstruct_field(const MomentField& f, const Grid& g,
                             const ReconConfig& cfg, unsigned nthreads) {
  ReconField out;
  out.nx = g.nx;
  out.ny = g.ny;
  out.h.resize((size_t)g.nx * g.ny);
  out.vt.resize((size_t)g.nx * g.ny);
  out.wt.resize((size_t)g.nx * g.ny);
  parallel_for((long)g.nx * g.ny, nthreads, [&](long cell) {
    int i = (int)(cell % g.nx), j = (int)(cell / g.nx);
    Stencil3x3 st = gather_stencil(f, g, i, j);
    // direction-by-direction first moments
    Recon1d rx = reconstruct_moment_1d(
        {st.at(-1, 0).u, st.at(0, 0).u, st.at(1, 0).u},
        {st.at(-1, 0).v, st.at(1, 0).v}, cfg);
    Recon1d ry = reconstruct_moment_1d(
        {st.at(0, -1).u, st.at(0, 0).u, st.at(0, 1).u},
        {st.at(0, -1).w, st.at(0, 1).w}, cfg);
    std::array<double, 9> ub;
    for (int s = 0; s < 9; ++s) ub[s] = st.m[s].u;
    Recon2d rc = reconstruct_cell(ub, rx.vtilde, ry.vtilde, cfg);
    out.h[cell] = rc.h;
    out.vt[cell] = rx.vtilde;
    out.wt[cell] = ry.vtilde;
  });
  return out;
}

CubicPoly background_poly(const ReconField& r, const Grid& g, int p, int q) {
  auto cell = g.resolve(p, q);
  if (!cell) return CubicPoly{};
  return r.h[(size_t)cell->second * r.nx + cell->first];
}

}  // namespace slh
