#pragma once

#include <cstdlib>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace torsionlab {

/// Thread count for sweeps: TORSIONLAB_THREADS if set and positive, otherwise
/// the OpenMP default; 1 when built without OpenMP.
inline int sweep_threads() {
#if defined(_OPENMP)
    if (const char* env = std::getenv("TORSIONLAB_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Runs body(i) for i in [0, n). Iterations must be independent; results
/// should be written to pre-sized slots so the output order is deterministic
/// regardless of the thread count.
template <typename Body>
void parallel_for(long n, Body body) {
#if defined(_OPENMP)
    int threads = sweep_threads();
    if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
#endif
    for (long i = 0; i < n; ++i) body(i);
}

}  // namespace torsionlab
