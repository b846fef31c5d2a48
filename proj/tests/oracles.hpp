#pragma once

// Test-only oracles. Everything here is independent of the library's
// production evaluation paths: direct summation with integral brackets,
// MPFR's own lngamma, and series acceleration for Euler's constant.

#include "zetadet/real.hpp"

#include <mpfr.h>

#include <vector>

namespace zetadet::testing {

// Direct summation of zeta(w, a) for w > 1, tail bracketed by integral
// comparison of the decreasing integrand.
inline NumValue zeta_direct_sum(const Real& w, const Real& a, long terms) {
    Real acc(0);
    for (long k = terms - 1; k >= 0; --k) acc += pow(a + k, -w);
    Real hi = pow(a + (terms - 1), Real(1L) - w) / (w - 1);
    Real lo = pow(a + terms, Real(1L) - w) / (w - 1);
    return {acc + (lo + hi) / 2, (fabs(hi - lo) / 2).to_double() * 1.01 + 1e-30};
}

// MPFR's lngamma: a different algorithm family from the zeta'(0, z) route.
inline Real lngamma_oracle(const Real& z) {
    Real r;
    mpfr_lngamma(r.raw(), z.raw(), MPFR_RNDN);
    return r;
}

// Euler's constant from the slowly convergent H_N - log N, accelerated by
// two Aitken passes over a geometric N ladder. Good to ~1e-13.
inline Real euler_gamma_oracle() {
    std::vector<Real> s;
    long n = 1000;
    for (int k = 0; k < 5; ++k, n *= 2) {
        Real h(0);
        for (long j = n; j >= 1; --j) h += 1 / Real(j);
        s.push_back(h - log(Real(n)));
    }
    auto aitken = [](const std::vector<Real>& v) {
        std::vector<Real> out;
        for (size_t i = 0; i + 2 < v.size(); ++i) {
            Real d1 = v[i + 1] - v[i];
            Real d2 = v[i + 2] - v[i + 1];
            out.push_back(v[i + 2] - d2 * d2 / (d2 - d1));
        }
        return out;
    };
    return aitken(aitken(s)).back();
}

inline double dist(const Real& a, const Real& b) { return fabs(a - b).to_double(); }

} // namespace zetadet::testing
