#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bsl {

// Serial reference for map_indexed; kept for testing and benchmarking.
template <class R, class Fn>
std::vector<R> map_indexed_serial(std::int64_t n, Fn fn) {
  std::vector<R> out(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = fn(i);
  }
  return out;
}

// Evaluates fn(i) for i in [0, n) into slot i. Trials are independent, so the
// schedule never affects the result: output is in trial-index order no matter
// the thread count. threads = 0 uses the runtime default, threads = 1 runs
// the serial reference.
template <class R, class Fn>
std::vector<R> map_indexed(std::int64_t n, Fn fn, int threads = 0) {
#ifdef _OPENMP
  if (threads == 1) {
    return map_indexed_serial<R>(n, fn);
  }
  std::vector<R> out(static_cast<std::size_t>(n));
  int want = threads > 0 ? threads : omp_get_max_threads();
  // Coarse chunks amortize scheduling on micro-trials while still load
  // balancing heavy-tailed ones.
  std::int64_t chunk = std::max<std::int64_t>(1, n / (8 * want));
  std::atomic<bool> failed{false};
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, chunk) num_threads(want)
  for (std::int64_t i = 0; i < n; ++i) {
    if (failed.load(std::memory_order_relaxed)) {
      continue;
    }
    try {
      out[static_cast<std::size_t>(i)] = fn(i);
    } catch (...) {
#pragma omp critical(bsl_map_indexed_error)
      {
        if (!failed.exchange(true)) {
          error = std::current_exception();
        }
      }
    }
  }
  if (failed.load()) {
    std::rethrow_exception(error);
  }
  return out;
#else
  (void)threads;
  return map_indexed_serial<R>(n, fn);
#endif
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace bsl
