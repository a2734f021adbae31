#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace plie {

// Execution policy for the verification sweeps and the polynomial kernels.
// Serial is the reference path; Parallel uses OpenMP when compiled in and
// degrades to the serial loop otherwise. Results are written to preallocated
// slots, so both paths produce identical, deterministically ordered output.
enum class Exec { Serial, Parallel };

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

// Runs fn(i) for i in [0, n). Tasks must be independent.
template <class Fn>
void parallel_for(std::size_t n, Exec exec, Fn&& fn) {
    if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            fn(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

} // namespace plie
