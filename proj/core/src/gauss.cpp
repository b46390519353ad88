#include "slhweno/gauss.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace slh {

void legendre_eval(int n, double x, double& p, double& dp) {
  // Three-term recurrence; dp from the standard derivative identity.
  double p0 = 1.0, p1 = x;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0);
}

static QuadRule make_rule(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  QuadRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess, then Newton.  Converges in < 10 steps.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre_eval(n, x, p, dp);
      double dx = -p / dp;
      x += dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_eval(n, x, p, dp);
    x -= p / dp;  // final polish
    legendre_eval(n, x, p, dp);
    r.x[n - 1 - i] = x;  // cos ordering is descending; store ascending
    r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  // Symmetrize: nodes come in +/- pairs, so average out the last ulp of
  // asymmetry.  Keeps everything downstream exactly reflection-invariant.
  for (int i = 0; i < n / 2; ++i) {
    double a = 0.5 * (r.x[n - 1 - i] - r.x[i]);
    r.x[i] = -a;
    r.x[n - 1 - i] = a;
    double w = 0.5 * (r.w[i] + r.w[n - 1 - i]);
    r.w[i] = r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.x[n / 2] = 0.0;
  return r;
}

const QuadRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, QuadRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

}  // namespace slh
