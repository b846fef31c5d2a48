#pragma once

#include "zetadet/real.hpp"

namespace zetadet {

// Euler-Maclaurin evaluation parameters. The tail past k < truncation_start
// is replaced by the integral term, the boundary term and correction_order/2
// Bernoulli corrections; the engine raises the truncation point and its
// internal precision until the estimated error meets target_abs_err.
struct EMConfig {
    int truncation_start = 24; // N >= 2
    int correction_order = 24; // 2J, positive even, <= 40
    double target_abs_err = 1e-30;

    void validate() const;
};

// Config whose target matches the configured working-precision digit count.
EMConfig default_em_config();

// Hurwitz zeta zeta(w, a) for real w != 1 and a > 0.
NumValue hurwitz_zeta(const Real& w, const Real& a, const EMConfig& cfg);
inline NumValue hurwitz_zeta(const Real& w, const Real& a) { return hurwitz_zeta(w, a, default_em_config()); }

// d/dw zeta(w, a), by termwise differentiation of the Euler-Maclaurin formula.
NumValue hurwitz_zeta_dw(const Real& w, const Real& a, const EMConfig& cfg);
inline NumValue hurwitz_zeta_dw(const Real& w, const Real& a) { return hurwitz_zeta_dw(w, a, default_em_config()); }

// Digamma psi(z) for z > 0, via upward recurrence plus the asymptotic series.
NumValue digamma(const Real& z, const EMConfig& cfg);
inline NumValue digamma(const Real& z) { return digamma(z, default_em_config()); }

// zeta'(-k) = d/dw zeta(w, 1) at w = -k; memoized per working precision.
NumValue riemann_zeta_deriv(unsigned k, const EMConfig& cfg);
inline NumValue riemann_zeta_deriv(unsigned k) { return riemann_zeta_deriv(k, default_em_config()); }

namespace detail {

// Direct sums sum_{k=0}^{n-1} (k+a)^{-w} (log-weighted for the derivative).
// The serial loop is the reference implementation; the OpenMP kernel sums
// fixed chunks and folds them in index order, so its result is identical
// for every thread count. `abs_acc` receives sum |term| for rounding-error
// estimates. `prec_bits` is the precision workers compute at.
Real zeta_partial_sum_serial(const Real& w, const Real& a, long n, bool log_weighted, int prec_bits,
                             double* abs_acc);
Real zeta_partial_sum_parallel(const Real& w, const Real& a, long n, bool log_weighted, int prec_bits,
                               double* abs_acc);

} // namespace detail

} // namespace zetadet
