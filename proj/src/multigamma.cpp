#include "zetadet/multigamma.hpp"

#include "zetadet/combinatorics.hpp"
#include "zetadet/errors.hpp"
#include "zetadet/parallel.hpp"
#include "zetadet/sphere_polynomials.hpp"

#include <cmath>

namespace zetadet {

Real eval_poly(const RationalPolynomial& p, const Arg& z) {
    if (z.exact) return Real(p.evaluate(*z.exact));
    return p.evaluate_as<Real>(z.approx);
}

std::vector<Real> power_table(const Arg& t, int max_pow) {
    std::vector<Real> out;
    out.reserve(static_cast<size_t>(max_pow) + 1);
    if (t.exact) {
        Rational p(1);
        for (int j = 0; j <= max_pow; ++j) {
            out.emplace_back(p);
            p *= *t.exact;
        }
    } else {
        Real p(1L);
        for (int j = 0; j <= max_pow; ++j) {
            out.push_back(p);
            p *= t.approx;
        }
    }
    return out;
}

NumValue barnes_zeta(int n, const Real& w, const Arg& z, const EMConfig& cfg) {
    if (n < 1) throw domain_error("barnes_zeta: n must be >= 1");
    if (!z.positive()) throw domain_error("barnes_zeta: z must be positive");
    if (w.is_integer() && w >= 1 && w <= n) throw pole_error("barnes_zeta: w in {1..n} is a pole");

    Real acc(0);
    double err = 0;
    for (int k = 0; k <= n - 1; ++k) {
        Real bk = eval_poly(b_barnes(n, k), z);
        NumValue zk = hurwitz_zeta(w - k, z.approx, cfg);
        acc += bk * zk.value;
        err += std::fabs(bk.to_double()) * zk.err;
    }
    return {acc, err};
}

std::vector<NumValue> barnes_log_table(int max_l, const Arg& z, const EMConfig& cfg) {
    if (max_l < 1) throw domain_error("barnes_log_table: max_l must be >= 1");
    if (!z.positive()) throw domain_error("barnes_log_table: z must be positive");

    // zeta'(-k, z) for k = 0..max_l-1, shared by all Gamma_l.
    std::vector<NumValue> zd(static_cast<size_t>(max_l));
    parallel_for_indexed(zd.size(), [&](std::size_t k) {
        zd[k] = hurwitz_zeta_dw(Real(-static_cast<long>(k)), z.approx, cfg);
    });

    std::vector<NumValue> out(static_cast<size_t>(max_l));
    for (int l = 1; l <= max_l; ++l) {
        Real acc(0);
        double err = 0;
        for (int k = 0; k <= l - 1; ++k) {
            Real bk = eval_poly(b_barnes(l, k), z);
            acc += bk * zd[static_cast<size_t>(k)].value;
            err += std::fabs(bk.to_double()) * zd[static_cast<size_t>(k)].err;
        }
        out[static_cast<size_t>(l - 1)] = NumValue{std::move(acc), err};
    }
    return out;
}

NumValue log_barnes_gamma(int n, const Arg& z, const EMConfig& cfg) {
    if (n < 0) throw domain_error("log_barnes_gamma: n must be >= 0");
    if (!z.positive()) throw domain_error("log_barnes_gamma: z must be positive");
    if (n == 0) return {-log(z.approx), default_target_abs_err()};
    return barnes_log_table(n, z, cfg).back();
}

std::vector<NumValue> milnor_log_table(int max_r, const Arg& z, const EMConfig& cfg) {
    std::vector<NumValue> barnes = barnes_log_table(max_r, z, cfg);
    std::vector<NumValue> out(static_cast<size_t>(max_r));
    for (int r = 1; r <= max_r; ++r) {
        Real acc(0);
        double err = 0;
        for (int l = 1; l <= r; ++l) {
            Real cl = eval_poly(c_milnor(r, l), z);
            acc += cl * barnes[static_cast<size_t>(l - 1)].value;
            err += std::fabs(cl.to_double()) * barnes[static_cast<size_t>(l - 1)].err;
        }
        out[static_cast<size_t>(r - 1)] = NumValue{std::move(acc), err};
    }
    return out;
}

NumValue log_milnor_gamma(int r, const Arg& z, const EMConfig& cfg) {
    if (r < 1) throw domain_error("log_milnor_gamma: r must be >= 1");
    if (!z.positive()) throw domain_error("log_milnor_gamma: z must be positive");
    return milnor_log_table(r, z, cfg).back();
}

NumValue log_milnor_gamma_direct(int r, const Arg& z, const EMConfig& cfg) {
    if (r < 1) throw domain_error("log_milnor_gamma_direct: r must be >= 1");
    if (!z.positive()) throw domain_error("log_milnor_gamma_direct: z must be positive");
    return hurwitz_zeta_dw(Real(1L - r), z.approx, cfg);
}

NumValue milnor_phi_closed(int m, int r, const Arg& t, const Arg& z, const EMConfig& cfg) {
    if (m < 0 || r < 1) throw domain_error("milnor_phi_closed: need m >= 0 and r >= 1");
    const Arg tz = arg_add(t, z);
    if (!z.positive() || !tz.positive()) throw domain_error("milnor_phi_closed: need z > 0 and t+z > 0");

    const std::vector<NumValue> g_tz = milnor_log_table(m + r, tz, cfg);
    const std::vector<NumValue> g_z = milnor_log_table(m + r, z, cfg);
    const std::vector<Real> tp = power_table(t, m + r);
    const Rational fac_rm1 = rat(factorial(static_cast<unsigned long>(r - 1)));

    Real acc(0);
    double err = 0;
    for (int k = r; k <= m + r; ++k) {
        Rational c = rat(binomial(Integer(m), static_cast<unsigned long>(k - r))) / fac_rm1;
        if ((k + r) % 2 != 0) c = -c;
        Real weight = Real(c) * tp[static_cast<size_t>(m + r - k)];
        acc += weight * g_tz[static_cast<size_t>(k - 1)].value;
        err += std::fabs(weight.to_double()) * g_tz[static_cast<size_t>(k - 1)].err;
    }

    acc += Real(harmonic(r, m) / rat(rising_factorial(m + 1, static_cast<unsigned long>(r)))) *
           tp[static_cast<size_t>(m + r)];

    for (int l = r; l <= m + r - 1; ++l) {
        Rational c = rat(1, 1) / rat(binomial(Integer(l), static_cast<unsigned long>(r)) *
                                     factorial(static_cast<unsigned long>(r)));
        if ((m + r - 1 + l) % 2 != 0) c = -c;
        Rational bval_den(m + r - l);
        Real bv = eval_poly(bernoulli_polynomial(static_cast<unsigned>(m + r - l)), z);
        acc += Real(c / bval_den) * bv * tp[static_cast<size_t>(l)];
    }

    for (int l = 1; l <= r - 1; ++l) {
        Rational c = rat(binomial(Integer(r - 1), static_cast<unsigned long>(l))) / fac_rm1 *
                     harmonic(r - l, r - 1) / Rational(m + r - l);
        if ((m + 1) % 2 != 0) c = -c;
        Real bv = eval_poly(bernoulli_polynomial(static_cast<unsigned>(m + r - l)), z);
        acc += Real(c) * bv * tp[static_cast<size_t>(l)];
    }

    for (int k = 0; k <= r - 1; ++k) {
        Rational c = rat(binomial(Integer(r - 1), static_cast<unsigned long>(k))) / fac_rm1;
        if ((m + 1) % 2 != 0) c = -c;
        Real weight = Real(c) * tp[static_cast<size_t>(k)];
        acc += weight * g_z[static_cast<size_t>(m + r - k - 1)].value;
        err += std::fabs(weight.to_double()) * g_z[static_cast<size_t>(m + r - k - 1)].err;
    }

    return {std::move(acc), err + 1e-28};
}

NumValue milnor_int_closed(int r, int m, const Arg& t, const Arg& z, const EMConfig& cfg) {
    if (m < 0 || r < 1) throw domain_error("milnor_int_closed: need m >= 0 and r >= 1");
    const Arg tz = arg_add(t, z);
    if (!z.positive() || !tz.positive()) throw domain_error("milnor_int_closed: need z > 0 and t+z > 0");

    const std::vector<NumValue> g_tz = milnor_log_table(m + r + 1, tz, cfg);
    const std::vector<NumValue> g_z = milnor_log_table(m + r + 1, z, cfg);
    const std::vector<Real> tp = power_table(t, m + 1);
    const Integer mf = factorial(static_cast<unsigned long>(m));
    const Integer rf1 = factorial(static_cast<unsigned long>(r - 1));

    Real acc(0);
    double err = 0;
    for (int l = 1; l <= m + 1; ++l) {
        Rational c = rat(mf * rf1, factorial(static_cast<unsigned long>(m + 1 - l)) *
                                       factorial(static_cast<unsigned long>(r + l - 1)));
        if ((l - 1) % 2 != 0) c = -c;
        Real weight = Real(c) * tp[static_cast<size_t>(m + 1 - l)];
        acc += weight * g_tz[static_cast<size_t>(r + l - 1)].value;
        err += std::fabs(weight.to_double()) * g_tz[static_cast<size_t>(r + l - 1)].err;

        Rational cp = rat(mf * rf1, factorial(static_cast<unsigned long>(m + 1 - l)) *
                                        factorial(static_cast<unsigned long>(r + l))) *
                      harmonic(r, r + l - 1);
        if (l % 2 != 0) cp = -cp;
        Real bv = eval_poly(bernoulli_polynomial(static_cast<unsigned>(r + l)), tz);
        acc += Real(cp) * bv * tp[static_cast<size_t>(m + 1 - l)];
    }

    Rational tail = rat(1, m + 1) / rat(binomial(Integer(m + r), static_cast<unsigned long>(m + 1)));
    if ((m + 1) % 2 != 0) tail = -tail;
    Real bz = eval_poly(bernoulli_polynomial(static_cast<unsigned>(m + r + 1)), z);
    acc += Real(tail) * (g_z[static_cast<size_t>(m + r)].value -
                         Real(harmonic(r, m + r) / Rational(m + r + 1)) * bz);
    err += std::fabs(to_double(tail)) * g_z[static_cast<size_t>(m + r)].err;

    return {std::move(acc), err + 1e-28};
}

LadderReport ladder_check(int n, const Arg& z, int m, double tolerance, const EMConfig& cfg) {
    // m = n is still covered by the Gamma_0(z) = 1/z convention.
    if (n < 1 || m < 0 || m > n) throw domain_error("ladder_check: need 1 <= n and 0 <= m <= n");
    if (!z.positive()) throw domain_error("ladder_check: z must be positive");

    Arg z_shift = z.exact ? Arg::of(*z.exact + m) : Arg::of(z.approx + static_cast<long>(m));
    NumValue lhs = log_barnes_gamma(n, z_shift, cfg);

    Real rhs(0);
    for (int l = 0; l <= m; ++l) {
        NumValue g = log_barnes_gamma(n - l, z, cfg);
        Real coef = Real(rat(binomial(Integer(m), static_cast<unsigned long>(l))));
        if (l % 2 != 0) coef = -coef;
        rhs += coef * g.value;
    }

    LadderReport report;
    report.residual = fabs(lhs.value - rhs).to_double();
    report.tolerance = tolerance;
    report.passed = report.residual <= tolerance;
    return report;
}

} // namespace zetadet
