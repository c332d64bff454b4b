#ifndef PARTYHECKE_PARALLEL_HPP
#define PARTYHECKE_PARALLEL_HPP

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace partyhecke {

// Runtime switch for the OpenMP kernels. Every parallel kernel in this
// library has a serial reference path; the two must produce identical
// results (this is asserted in tests/test_parallel.cpp). The switch lets
// the benchmark tool and the tests run both paths in one process.
inline bool& parallel_enabled() {
  static bool enabled = true;
  return enabled;
}

inline int thread_count() {
#ifdef _OPENMP
  return parallel_enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

// Index-space map. Chunks are deterministic; the body must only write to
// per-index slots (no cross-index reductions inside the body).
template <typename F>
void parallel_for(std::size_t count, F&& body) {
#ifdef _OPENMP
  if (parallel_enabled() && count > 1) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  for (std::size_t i = 0; i < count; ++i) {
    body(i);
  }
}

// Map a function over [0, count) collecting results in index order.
// The merge step is serial and deterministic regardless of thread count.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, F&& fn) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace partyhecke

#endif
