#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cot {

// Worker count: CONCAVE_OT_THREADS caps it, 0 or unset means auto.
inline int thread_count() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("CONCAVE_OT_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0 && cap < n) n = cap;
    }
    return n;
#else
    return 1;
#endif
}

// Parallel trial loop over [0, count). The body must write only to its
// own trial slot; results are reduced serially afterwards, so output
// is independent of the worker count.
template <typename Body>
void parallel_for(int count, Body&& body) {
#ifdef _OPENMP
    const int nt = thread_count();
#pragma omp parallel for num_threads(nt) schedule(dynamic)
    for (int t = 0; t < count; ++t) body(t);
#else
    for (int t = 0; t < count; ++t) body(t);
#endif
}

// Serial reference path, used by tests to pin down that the parallel
// loop produces identical results.
template <typename Body>
void serial_for(int count, Body&& body) {
    for (int t = 0; t < count; ++t) body(t);
}

}  // namespace cot
