#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coloedr {

// Execution policy for the data-parallel kernels (scans, sweeps, event
// batches). The serial path is the reference implementation; both paths
// write per-index results to preallocated slots, so outputs are identical
// regardless of policy or thread count.
enum class Exec { serial, parallel };

template <typename Body>
void parallel_for(std::size_t n, Exec exec, Body&& body) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) {
    body(i);
  }
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace coloedr
