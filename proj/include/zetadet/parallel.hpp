#pragma once

#include "zetadet/real.hpp"

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zetadet {

bool parallel_enabled();
void set_parallel_enabled(bool on);

// Runs f(0..n-1), possibly across OpenMP threads. Callers own the output
// slots indexed by i, so aggregation order is fixed and results do not
// depend on the thread count. The caller's working precision is propagated
// to workers; the first exception is rethrown after the loop joins.
template <class F>
void parallel_for_indexed(std::size_t n, F&& f) {
#ifdef _OPENMP
    if (parallel_enabled() && n > 1) {
        const int prec = working_precision_bits();
        std::exception_ptr first_error;
#pragma omp parallel
        {
            PrecisionGuard guard(prec);
#pragma omp for schedule(dynamic, 1)
            for (long i = 0; i < static_cast<long>(n); ++i) {
                try {
                    f(static_cast<std::size_t>(i));
                } catch (...) {
#pragma omp critical(zetadet_parallel_error)
                    if (!first_error) first_error = std::current_exception();
                }
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) f(i);
}

} // namespace zetadet
