#include "zetadet/hurwitz.hpp"

#include "zetadet/combinatorics.hpp"
#include "zetadet/errors.hpp"
#include "zetadet/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace zetadet {

void EMConfig::validate() const {
    if (truncation_start < 2) throw std::invalid_argument("EMConfig: truncation_start must be >= 2");
    if (correction_order < 2 || correction_order % 2 != 0 || correction_order > 40)
        throw std::invalid_argument("EMConfig: correction_order must be a positive even number <= 40");
    if (!(target_abs_err > 0)) throw std::invalid_argument("EMConfig: target_abs_err must be positive");
}

EMConfig default_em_config() {
    EMConfig cfg;
    cfg.target_abs_err = default_target_abs_err();
    return cfg;
}

namespace detail {

namespace {

// One term of the direct sum: (k+a)^{-w}, or -log(k+a) (k+a)^{-w}.
void sum_range(const Real& w, const Real& a, long lo, long hi, bool log_weighted, Real& out, double& abs_acc) {
    Real acc(0);
    double aa = 0;
    for (long k = lo; k < hi; ++k) {
        Real base = a + k;
        Real lb = log(base);
        Real term = exp(-(w * lb));
        if (log_weighted) term *= -lb;
        acc += term;
        aa += std::fabs(term.to_double());
    }
    out = std::move(acc);
    abs_acc = aa;
}

} // namespace

Real zeta_partial_sum_serial(const Real& w, const Real& a, long n, bool log_weighted, int prec_bits,
                             double* abs_acc) {
    PrecisionGuard guard(prec_bits);
    Real out;
    double aa = 0;
    sum_range(w, a, 0, n, log_weighted, out, aa);
    if (abs_acc) *abs_acc += aa;
    return out;
}

Real zeta_partial_sum_parallel(const Real& w, const Real& a, long n, bool log_weighted, int prec_bits,
                               double* abs_acc) {
    // Fixed chunk count: the summation order depends only on n, never on the
    // number of threads, so results are bit-reproducible.
    constexpr long kChunks = 64;
    if (n < 2 * kChunks) return zeta_partial_sum_serial(w, a, n, log_weighted, prec_bits, abs_acc);

    std::vector<Real> part(kChunks);
    std::vector<double> part_abs(kChunks, 0.0);
    const long step = (n + kChunks - 1) / kChunks;

    parallel_for_indexed(static_cast<std::size_t>(kChunks), [&](std::size_t c) {
        PrecisionGuard guard(prec_bits);
        const long lo = static_cast<long>(c) * step;
        const long hi = std::min(n, lo + step);
        if (lo < hi) sum_range(w, a, lo, hi, log_weighted, part[c], part_abs[c]);
    });

    PrecisionGuard guard(prec_bits);
    Real out(0);
    double aa = 0;
    for (long c = 0; c < kChunks; ++c) {
        out += part[c];
        aa += part_abs[c];
    }
    if (abs_acc) *abs_acc += aa;
    return out;
}

} // namespace detail

namespace {

constexpr long kParallelThreshold = 4096;

// P = (w)_m = w (w+1) ... (w+m-1) and dP = dP/dw, accumulated jointly so a
// vanishing factor (w at a nonpositive integer) leaves dP well defined.
void rising_with_derivative(const Real& w, long m, Real& P, Real& dP) {
    P = Real(1L);
    dP = Real(0L);
    for (long i = 0; i < m; ++i) {
        Real f = w + i;
        dP = dP * f + P;
        P *= f;
    }
}

struct EmTerms {
    Real value;
    double abs_acc = 0;   // sum of |term| magnitudes, for rounding estimates
    double remainder = 0; // bound on the truncated Euler-Maclaurin tail
};

// Assembles the Euler-Maclaurin formula (or its w-derivative) at truncation
// point n with J corrections, all at precision prec_bits.
EmTerms em_sum(const Real& w, const Real& a, long n, int J, bool deriv, int prec_bits) {
    PrecisionGuard guard(prec_bits);
    EmTerms out;

    Real sum = (n >= kParallelThreshold && parallel_enabled())
                   ? detail::zeta_partial_sum_parallel(w, a, n, deriv, prec_bits, &out.abs_acc)
                   : detail::zeta_partial_sum_serial(w, a, n, deriv, prec_bits, &out.abs_acc);

    Real x = a + n;
    Real lx = log(x);
    Real wm1 = w - 1;

    // Integral term x^{1-w}/(w-1) and boundary term x^{-w}/2.
    Real x_pow_1mw = exp(-(wm1 * lx));
    Real x_pow_mw = exp(-(w * lx));
    Real integral, boundary;
    if (!deriv) {
        integral = x_pow_1mw / wm1;
        boundary = x_pow_mw / 2;
    } else {
        integral = -x_pow_1mw * (lx / wm1 + 1 / (wm1 * wm1));
        boundary = -(lx * x_pow_mw) / 2;
    }
    sum += integral;
    sum += boundary;
    out.abs_acc += std::fabs(integral.to_double()) + std::fabs(boundary.to_double());

    // Bernoulli corrections j = 1..J; the first omitted term (j = J+1) bounds
    // the remainder, with a safety factor of 4.
    for (int j = 1; j <= J + 1; ++j) {
        Real P, dP;
        rising_with_derivative(w, 2 * j - 1, P, dP);
        Real coef = Real(bernoulli_number(static_cast<unsigned>(2 * j))) / Real(factorial(static_cast<unsigned long>(2 * j)));
        Real xp = exp(-((w + (2 * j - 1)) * lx));
        Real term = deriv ? coef * xp * (dP - P * lx) : coef * xp * P;
        if (j <= J) {
            sum += term;
            out.abs_acc += std::fabs(term.to_double());
        } else {
            out.remainder = 4.0 * std::fabs(term.to_double());
        }
    }

    out.value = std::move(sum);
    return out;
}

NumValue em_engine(const Real& w, const Real& a, const EMConfig& cfg, bool deriv) {
    cfg.validate();
    if (!(a > 0)) throw domain_error("hurwitz_zeta: a must be positive");
    if (!w.is_finite() || !a.is_finite()) throw domain_error("hurwitz_zeta: non-finite argument");
    if (w == 1) throw pole_error("hurwitz_zeta: w = 1 is a pole");

    const int J = cfg.correction_order / 2;
    const double wd = w.to_double();
    const double ad = a.to_double();

    // Corrections only shrink once 2 pi (n+a) clears |w| + 2J.
    long n = std::max<long>(cfg.truncation_start,
                            static_cast<long>(std::ceil((std::fabs(wd) + 2.0 * J + 2.0) / 3.141 - ad)) + 1);
    n = std::max<long>(n, 2);

    const int base_prec = working_precision_bits();
    int guard_bits = 32;

    NumValue best{Real::nan(), std::numeric_limits<double>::infinity()};
    for (int attempt = 0; attempt < 64; ++attempt) {
        EmTerms t = em_sum(w, a, n, J, deriv, base_prec + guard_bits);
        const double rounding =
            (t.abs_acc + std::fabs(t.value.to_double())) * std::ldexp(64.0, -(base_prec + guard_bits));
        const double err = t.remainder + rounding;
        if (err < best.err) best = NumValue{t.value, err};
        if (err <= cfg.target_abs_err) return best;
        // Deterministic escalation: grow the truncation point while the tail
        // dominates, else buy precision.
        if (t.remainder > rounding)
            n *= 2;
        else
            guard_bits += 64;
        if (n > (1L << 26) || guard_bits > 4096) break;
    }
    throw convergence_error("hurwitz_zeta: tolerance unreachable", best.value.str(25), best.err);
}

} // namespace

NumValue hurwitz_zeta(const Real& w, const Real& a, const EMConfig& cfg) { return em_engine(w, a, cfg, false); }

NumValue hurwitz_zeta_dw(const Real& w, const Real& a, const EMConfig& cfg) { return em_engine(w, a, cfg, true); }

NumValue digamma(const Real& z, const EMConfig& cfg) {
    cfg.validate();
    if (!(z > 0) || !z.is_finite()) throw domain_error("digamma: z must be positive");

    const int J = cfg.correction_order / 2;
    const int base_prec = working_precision_bits();
    int guard_bits = 32;

    // First omitted asymptotic term ~ |B_{2J+2}|/(2J+2) x^{-(2J+2)}.
    const double b_next = std::fabs(to_double(bernoulli_number(static_cast<unsigned>(2 * J + 2))));
    double xmin = std::max(8.0, std::pow(b_next / ((2.0 * J + 2.0) * cfg.target_abs_err), 1.0 / (2.0 * J + 2.0)));

    NumValue best{Real::nan(), std::numeric_limits<double>::infinity()};
    for (int attempt = 0; attempt < 64; ++attempt) {
        PrecisionGuard guard(base_prec + guard_bits);
        Real x(z);
        Real shift_acc(0);
        double abs_acc = 0;
        long shifts = 0;
        while (x < Real(xmin)) {
            Real inv = 1 / x;
            shift_acc -= inv;
            abs_acc += std::fabs(inv.to_double());
            x += Real(1L);
            ++shifts;
            if (shifts > 4000000) throw convergence_error("digamma: shift runaway", x.str(10), 1.0);
        }
        Real lx = log(x);
        Real inv_x2 = 1 / (x * x);
        Real acc = lx - 1 / (x * 2);
        Real p(inv_x2);
        for (int j = 1; j <= J; ++j) {
            Real term = Real(bernoulli_number(static_cast<unsigned>(2 * j))) / Real(2L * j) * p;
            acc -= term;
            abs_acc += std::fabs(term.to_double());
            p *= inv_x2;
        }
        const double next = b_next / (2.0 * J + 2.0) * std::fabs(p.to_double());
        Real value = acc + shift_acc;
        const double rounding =
            (abs_acc + std::fabs(value.to_double())) * std::ldexp(64.0, -(base_prec + guard_bits));
        const double err = 4.0 * next + rounding;
        if (err < best.err) best = NumValue{value, err};
        if (err <= cfg.target_abs_err) return best;
        if (4.0 * next > rounding)
            xmin *= 2;
        else
            guard_bits += 64;
        if (guard_bits > 4096) break;
    }
    throw convergence_error("digamma: tolerance unreachable", best.value.str(25), best.err);
}

namespace {

struct ZetaDerivCache {
    std::mutex mu;
    // k -> best value seen, with the precision and error it was computed at.
    std::map<unsigned, NumValue> values;
    std::map<unsigned, int> prec_bits;
};

ZetaDerivCache& zeta_deriv_cache() {
    static ZetaDerivCache cache;
    return cache;
}

} // namespace

NumValue riemann_zeta_deriv(unsigned k, const EMConfig& cfg) {
    auto& cache = zeta_deriv_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.values.find(k);
        if (it != cache.values.end() && it->second.err <= cfg.target_abs_err &&
            cache.prec_bits[k] >= working_precision_bits())
            return it->second;
    }
    NumValue v = hurwitz_zeta_dw(Real(-static_cast<long>(k)), Real(1L), cfg);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.values.find(k);
        if (it == cache.values.end() || it->second.err > v.err) {
            cache.values[k] = v;
            cache.prec_bits[k] = working_precision_bits();
        }
    }
    return v;
}

} // namespace zetadet
