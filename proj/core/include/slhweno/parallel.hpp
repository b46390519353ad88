#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

// Static-partition parallel loop.  Work items write to disjoint outputs, so
// results are bitwise identical for any thread count; reductions elsewhere
// are done serially in fixed order for the same reason.

namespace slh {

inline unsigned default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

// Calls fn(k) for k in [0, n) across nthreads workers (contiguous chunks).
// The first exception thrown by any worker is rethrown to the caller.
template <class Fn>
void parallel_for(long n, unsigned nthreads, Fn&& fn) {
  if (n <= 0) return;
  if (nthreads == 0) nthreads = default_threads();
  if (nthreads > (unsigned)n) nthreads = (unsigned)n;
  if (nthreads <= 1) {
    for (long k = 0; k < n; ++k) fn(k);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  long chunk = (n + nthreads - 1) / nthreads;
  for (unsigned t = 0; t < nthreads; ++t) {
    long lo = t * chunk;
    long hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (long k = lo; k < hi; ++k) fn(k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace slh
