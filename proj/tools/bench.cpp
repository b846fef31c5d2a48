// Compares the OpenMP kernels against the serial reference paths: the
// chunked direct sum inside the Hurwitz engine and the grid-level fan-out
// used by the verification suites.

#include "zetadet/hurwitz.hpp"
#include "zetadet/parallel.hpp"
#include "zetadet/spectral.hpp"
#include "zetadet/verification.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace zetadet;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void bench_partial_sum(long n_terms, int reps) {
    Real w(2.5);
    Real a(1.25);
    const int prec = working_precision_bits();

    double serial = 0, parallel = 0, abs_acc = 0;
    Real ref, par;
    for (int i = 0; i < reps; ++i) {
        auto t0 = clock_type::now();
        ref = detail::zeta_partial_sum_serial(w, a, n_terms, false, prec, &abs_acc);
        serial += seconds_since(t0);
        t0 = clock_type::now();
        par = detail::zeta_partial_sum_parallel(w, a, n_terms, false, prec, &abs_acc);
        parallel += seconds_since(t0);
    }
    double diff = fabs(ref - par).to_double();
    std::printf("direct sum, %ld terms x%d    serial %.3fs   openmp %.3fs   speedup %.2fx   |diff| %.1e\n",
                n_terms, reps, serial, parallel, serial / parallel, diff);
}

void bench_det_grid() {
    EMConfig cfg = default_em_config();
    auto run_grid = [&]() {
        for (int n : {2, 3, 4})
            for (int r : {1, 2}) {
                DetResult d = log_higher_det({n, Arg::of(Real(0.2)), r}, cfg);
                (void)d;
            }
    };

    set_parallel_enabled(false);
    auto t0 = clock_type::now();
    run_grid();
    double serial = seconds_since(t0);

    set_parallel_enabled(true);
    t0 = clock_type::now();
    run_grid();
    double parallel = seconds_since(t0);

    std::printf("determinant grid (6 evals)   serial %.3fs   openmp %.3fs   speedup %.2fx\n", serial,
                parallel, serial / parallel);
}

void bench_oracle_suite() {
    EMConfig cfg = default_em_config();

    set_parallel_enabled(false);
    auto t0 = clock_type::now();
    auto reports_serial = verify_phi(cfg);
    double serial = seconds_since(t0);

    set_parallel_enabled(true);
    t0 = clock_type::now();
    auto reports_parallel = verify_phi(cfg);
    double parallel = seconds_since(t0);

    bool same = reports_serial.size() == reports_parallel.size();
    for (size_t i = 0; same && i < reports_serial.size(); ++i)
        same = reports_serial[i].main_value == reports_parallel[i].main_value;
    std::printf("phi verification suite       serial %.3fs   openmp %.3fs   speedup %.2fx   identical %s\n",
                serial, parallel, serial / parallel, same ? "yes" : "NO");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; parallel paths run serially\n");
#endif
    bench_partial_sum(100000, 3);
    bench_partial_sum(1000000, 1);
    bench_det_grid();
    bench_oracle_suite();
    return 0;
}
