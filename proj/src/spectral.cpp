#include "zetadet/spectral.hpp"

#include "zetadet/combinatorics.hpp"
#include "zetadet/errors.hpp"
#include "zetadet/parallel.hpp"
#include "zetadet/sphere_polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zetadet {

namespace {

Arg xi_plus_arg(int n, const Arg& s) { return arg_add(s, Rational(1) + n_check(n)); }
Arg xi_minus_arg(int n, const Arg& s) { return arg_add(arg_neg(s), Rational(1) + n_check(n)); }

bool abs_less_than(const Arg& s, const Rational& bound) {
    if (s.exact) return abs(*s.exact) < bound;
    return fabs(s.approx) < Real(bound);
}

} // namespace

void SphereProblem::validate() const {
    if (n < 1) throw domain_error("SphereProblem: n must be >= 1");
    if (r < 1) throw domain_error("SphereProblem: r must be >= 1");
    if (!abs_less_than(s, n_check(n) + 1))
        throw domain_error("SphereProblem: s outside I_n = (-(n+1)/2, (n+1)/2)");
}

std::string to_string(DetPath path) {
    switch (path) {
    case DetPath::factorization: return "factorization";
    case DetPath::closed_form_r1: return "closed_form_r1";
    case DetPath::oracle: return "oracle";
    }
    return "?";
}

long eigenvalue(int n, long k) {
    if (n < 1 || k < 0) throw domain_error("eigenvalue: need n >= 1 and k >= 0");
    return k * (k + n - 1);
}

Integer multiplicity(int n, long k) {
    if (n < 1 || k < 0) throw domain_error("multiplicity: need n >= 1 and k >= 0");
    Integer first = binomial(Integer(n + k), static_cast<unsigned long>(n));
    Integer second = (k >= 2) ? binomial(Integer(n + k - 2), static_cast<unsigned long>(n)) : Integer(0);
    return first - second;
}

NumValue two_var_hurwitz(const Real& a1, const Real& a2, const Real& w1, const Real& w2,
                         const EMConfig& cfg) {
    cfg.validate();
    if (!(a1 > 0) || !(a2 > 0)) throw domain_error("two_var_hurwitz: a1, a2 must be positive");
    Real delta = a2 - a1;
    Real bound = a2 < Real(1L) ? a2 : Real(1L);
    if (!(fabs(delta) < bound))
        throw domain_error("two_var_hurwitz: require |a2 - a1| < min(1, a2) for the series");
    Real ws = w1 + w2;
    if (ws.is_integer() && ws <= 1)
        throw pole_error("two_var_hurwitz: w1 + w2 on a singular line 1 - l");

    Real acc(0);
    double err = 0;
    Real binom(1L); // C(w1 + l - 1, l), updated incrementally
    Real delta_pow(1L);
    const double ratio = std::fabs(delta.to_double()) / std::min(1.0, a2.to_double());
    int quiet = 0;
    for (long l = 0; l < 100000; ++l) {
        Real weight = binom * delta_pow;
        NumValue zv = hurwitz_zeta(ws + l, a2, cfg);
        Real term = weight * zv.value;
        acc += term;
        err += std::fabs(weight.to_double()) * zv.err;

        const double mag = std::fabs(term.to_double());
        if (mag <= cfg.target_abs_err / 8 && l >= 4)
            ++quiet;
        else
            quiet = 0;
        if (quiet >= 3) {
            const double rho = std::min(0.95, ratio * 1.05 + 1e-6);
            err += mag * rho / (1 - rho) + cfg.target_abs_err / 4;
            return {std::move(acc), err};
        }
        binom *= (w1 + l) / (l + 1);
        delta_pow *= delta;
    }
    throw convergence_error("two_var_hurwitz: series did not settle", acc.str(25), err);
}

RationalPolynomial zeta_tilde_polynomial(int n, int r) {
    if (n < 1 || r < 1) throw domain_error("zeta_tilde_polynomial: need n >= 1 and r >= 1");
    const RationalPolynomial xi_m =
        RationalPolynomial::from_coeffs({Rational(1) + n_check(n), Rational(-1)}); // 1 + nc - s
    const RationalPolynomial two_s = RationalPolynomial::monomial(Rational(2), 1);

    RationalPolynomial acc;
    for (int d = 0; d <= n - 1; ++d) {
        const RationalPolynomial t_nd = t_poly(n, d);
        for (int l = 0; l <= r - 1; ++l) {
            const int bidx = 2 * r + d - l - 1;
            RationalPolynomial bpoly = bernoulli_polynomial(static_cast<unsigned>(bidx)).compose(xi_m);
            Rational c = rat(binomial(Integer(r - 1), static_cast<unsigned long>(l)), bidx);
            acc -= c * two_s.pow(static_cast<unsigned>(l)) * bpoly * t_nd;
        }
        Rational c2 = rat(1, 2 * r) / rat(binomial(Integer(2 * r + d - 1), static_cast<unsigned long>(r)));
        if (r % 2 == 0) c2 = -c2; // (-1)^{r+1}
        RationalPolynomial minus_two_s_pow = two_s.pow(static_cast<unsigned>(2 * r + d - 1));
        if ((2 * r + d - 1) % 2 != 0) minus_two_s_pow = -minus_two_s_pow; // (-2s)^{2r+d-1}
        acc += c2 * minus_two_s_pow * t_nd;
    }
    return acc;
}

Rational zeta_tilde_value(int n, const Rational& s, int r) {
    return zeta_tilde_polynomial(n, r).evaluate(s);
}

namespace {

// Product form of log I^d: harmonic-weighted exp term plus Milnor gammas at
// xi+ and xi- with binomial exponents in powers of 2s.
NumValue log_I_d_gamma_product(int n, int r, int d, const Arg& s, const EMConfig& cfg) {
    const int top = 2 * r + d - 1;
    const Arg xp = xi_plus_arg(n, s);
    const Arg xm = xi_minus_arg(n, s);
    const std::vector<Real> ts = power_table(arg_scale(s, Rational(2)), top);
    const std::vector<NumValue> gp = milnor_log_table(top, xp, cfg);
    const std::vector<NumValue> gm = milnor_log_table(top, xm, cfg);

    Rational c_exp = rat(factorial(static_cast<unsigned long>(r - 1)),
                         2 * rising_factorial(r + d, static_cast<unsigned long>(r))) *
                     harmonic(r, r + d - 1);
    if ((r + d) % 2 != 0) c_exp = -c_exp;
    Real acc = Real(c_exp) * ts[static_cast<size_t>(top)];
    double err = 0;

    for (int k = r; k <= top; ++k) {
        Rational c = rat(binomial(Integer(r + d - 1), static_cast<unsigned long>(k - r)));
        if ((k + d) % 2 != 0) c = -c;
        Real weight = Real(c) * ts[static_cast<size_t>(top - k)];
        acc += weight * gp[static_cast<size_t>(k - 1)].value;
        err += std::fabs(weight.to_double()) * gp[static_cast<size_t>(k - 1)].err;
    }
    for (int k = r + d; k <= top; ++k) {
        Rational c = -rat(binomial(Integer(r - 1), static_cast<unsigned long>(top - k)));
        Real weight = Real(c) * ts[static_cast<size_t>(top - k)];
        acc += weight * gm[static_cast<size_t>(k - 1)].value;
        err += std::fabs(weight.to_double()) * gm[static_cast<size_t>(k - 1)].err;
    }
    return {std::move(acc), err};
}

// Closed-form sum of the five pieces of -dH/dw at w = 1-r: direct Bernoulli/
// digamma terms plus the iterated-integral closed form at t = 2s, z = xi-.
NumValue log_I_d_h_series(int n, int r, int d, const Arg& s, const EMConfig& cfg) {
    const int top = 2 * r + d - 1; // index of the pole-adjacent term
    const int mm = r + d - 1;      // iterated-integral order in the tail piece
    const Arg xm = xi_minus_arg(n, s);
    const Arg t2s = arg_scale(s, Rational(2));
    const std::vector<Real> ts = power_table(t2s, top);
    const std::vector<NumValue> gm = milnor_log_table(top, xm, cfg);
    const NumValue psi_m = digamma(xm.approx, cfg);

    auto bern_at_xm = [&](int j) { return eval_poly(bernoulli_polynomial(static_cast<unsigned>(j)), xm); };

    Real acc(0);
    double err = 0;

    // -dH/dw of the l = 0 term.
    acc -= Real(2L) * gm[static_cast<size_t>(top - 1)].value;
    err += 2 * gm[static_cast<size_t>(top - 1)].err;

    // 1 <= l <= r-1 block.
    for (int l = 1; l <= r - 1; ++l) {
        Rational c = rat(binomial(Integer(r - 1), static_cast<unsigned long>(l))) *
                     harmonic(r - l, r - 1) / Rational(2 * r + d - l - 1);
        acc -= Real(c) * bern_at_xm(2 * r + d - l - 1) * ts[static_cast<size_t>(l)];
    }
    for (int k = r + d; k <= 2 * r + d - 2; ++k) {
        Rational c = rat(2 * binomial(Integer(r - 1), static_cast<unsigned long>(top - k)));
        Real weight = Real(c) * ts[static_cast<size_t>(top - k)];
        acc -= weight * gm[static_cast<size_t>(k - 1)].value;
        err += std::fabs(weight.to_double()) * gm[static_cast<size_t>(k - 1)].err;
    }

    // r <= l <= 2r+d-2 block.
    for (int l = r; l <= 2 * r + d - 2; ++l) {
        Rational c = rat(1, r) / rat(binomial(Integer(l), static_cast<unsigned long>(r))) /
                     Rational(2 * r + d - l - 1);
        if ((r + 1 + l) % 2 != 0) c = -c;
        acc += Real(c) * bern_at_xm(2 * r + d - l - 1) * ts[static_cast<size_t>(l)];
    }

    // Pole-adjacent l = 2r+d-1 term.
    Rational c4 = rat(factorial(static_cast<unsigned long>(r - 1)),
                      rising_factorial(r + d, static_cast<unsigned long>(r)));
    if ((r + d) % 2 != 0) c4 = -c4;
    acc -= Real(c4) * (Real(harmonic(r, r + d - 1) / 2) - psi_m.value) * ts[static_cast<size_t>(top)];
    err += std::fabs(to_double(c4)) * std::fabs(ts[static_cast<size_t>(top)].to_double()) * psi_m.err;

    // l >= 2r+d tail via the iterated-integral closed form; its gammas sit at
    // t + z = 2s + xi- = xi+.
    {
        const int m2 = 2 * r + d - 2;
        Rational c5 = rat(factorial(static_cast<unsigned long>(r - 1)));
        if (r % 2 != 0) c5 = -c5;

        Rational cr = rat(1, 1) / rat(rising_factorial(m2 - r + 2, static_cast<unsigned long>(r)));
        if ((m2 + 1) % 2 != 0) cr = -cr;
        Real inner = Real(cr) * psi_m.value * ts[static_cast<size_t>(m2 + 1)];
        double inner_err = std::fabs(to_double(cr) * ts[static_cast<size_t>(m2 + 1)].to_double()) * psi_m.err;

        NumValue phi = milnor_phi_closed(mm, r, t2s, xm, cfg);
        Real phi_part = phi.value;
        if (m2 % 2 != 0) phi_part = -phi_part;
        inner += phi_part;
        inner_err += phi.err;

        acc += Real(c5) * inner;
        err += std::fabs(to_double(c5)) * inner_err;
    }

    return {std::move(acc), err};
}

} // namespace

NumValue log_I_d(int n, int r, int d, const Arg& s, IdPath path, const EMConfig& cfg) {
    if (n < 1 || r < 1) throw domain_error("log_I_d: need n >= 1 and r >= 1");
    if (d < 0 || d > n - 1) throw domain_error("log_I_d: need 0 <= d <= n-1");
    SphereProblem probe{n, s, r};
    probe.validate();
    if (!xi_minus_arg(n, s).positive() || !xi_plus_arg(n, s).positive())
        throw domain_error("log_I_d: xi arguments must be positive");
    return path == IdPath::gamma_product ? log_I_d_gamma_product(n, r, d, s, cfg)
                                         : log_I_d_h_series(n, r, d, s, cfg);
}

DetResult log_higher_det(const SphereProblem& problem, const EMConfig& cfg) {
    problem.validate();
    const int n = problem.n;
    const int r = problem.r;
    const Rational nc = n_check(n);
    const Arg& s = problem.s;

    const bool prefactor = abs_less_than(s, nc);
    const Arg xp = xi_plus_arg(n, s);
    const Arg xm = xi_minus_arg(n, s);
    const int top = 2 * r + n - 2;

    std::vector<NumValue> gp, gm;
    {
        // The two Gamma_l tables are independent; evaluate them in parallel.
        std::vector<std::vector<NumValue>> tables(2);
        parallel_for_indexed(2, [&](std::size_t i) {
            tables[i] = barnes_log_table(top, i == 0 ? xp : xm, cfg);
        });
        gp = std::move(tables[0]);
        gm = std::move(tables[1]);
    }

    Real acc = eval_poly(f_poly(n, r), s);
    double err = std::fabs(acc.to_double()) * 1e-30;
    for (int l = 1; l <= top; ++l) {
        Real beta = eval_poly(beta_poly(n, r, l), s);
        acc += beta * (gp[static_cast<size_t>(l - 1)].value + gm[static_cast<size_t>(l - 1)].value);
        err += std::fabs(beta.to_double()) *
               (gp[static_cast<size_t>(l - 1)].err + gm[static_cast<size_t>(l - 1)].err);
    }

    if (prefactor) {
        // (nc^2 - s^2)^{r-1} * log(nc^2 - s^2), kept in log space.
        Real disc = s.exact ? Real(Rational(nc * nc - *s.exact * *s.exact))
                            : Real(nc * nc) - s.approx * s.approx;
        Real weight = pow(disc, static_cast<long>(r - 1));
        acc += weight * log(disc);
        err += std::fabs(weight.to_double()) * 1e-30;
    }

    return {{std::move(acc), err}, prefactor, DetPath::factorization};
}

namespace {

// Sum over k of coeff_k * zeta'(-k), the shared backbone of both closed forms.
NumValue zeta_deriv_combination(const std::vector<Rational>& coeffs, const EMConfig& cfg) {
    std::vector<NumValue> zd(coeffs.size());
    parallel_for_indexed(coeffs.size(), [&](std::size_t k) {
        if (coeffs[k] != 0) zd[k] = riemann_zeta_deriv(static_cast<unsigned>(k), cfg);
    });
    Real acc(0);
    double err = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        acc += Real(coeffs[k]) * zd[k].value;
        err += std::fabs(to_double(coeffs[k])) * zd[k].err;
    }
    return {std::move(acc), err};
}

} // namespace

DetResult det_laplacian(int n, DetPath path, const EMConfig& cfg) {
    if (n < 1) throw domain_error("det_laplacian: n must be >= 1");
    if (path == DetPath::factorization) {
        SphereProblem p{n, Arg::of(n_check(n)), 1};
        DetResult r = log_higher_det(p, cfg);
        return r;
    }
    if (n == 1) {
        // det = 4 pi^2.
        Real pi = Real::pi();
        return {{log(Real(4L) * pi * pi), 1e-30}, false, DetPath::closed_form_r1};
    }
    NumValue comb = zeta_deriv_combination(d_det_coeffs(n), cfg);
    Real acc = Real(f_poly(n, 1).evaluate(n_check(n))) - log(Real(static_cast<long>(n - 1)));
    acc += comb.value;
    return {{std::move(acc), comb.err + 1e-30}, false, DetPath::closed_form_r1};
}

DetResult det_yamabe(int n, DetPath path, const EMConfig& cfg) {
    if (n < 1) throw domain_error("det_yamabe: n must be >= 1");
    if (path == DetPath::factorization) {
        SphereProblem p{n, Arg::of(rat(1, 2)), 1};
        return log_higher_det(p, cfg);
    }
    if (n == 1) return {{log(Real(16L)), 1e-30}, false, DetPath::closed_form_r1};
    if (n == 2) {
        // det(Y_2) = det(Laplacian on S^2) by definition; share the code path
        // so the two outputs are bit-identical.
        DetResult r = det_laplacian(2, DetPath::closed_form_r1, cfg);
        r.path = DetPath::closed_form_r1;
        return r;
    }

    const std::vector<Rational> y = y_det_coeffs(n);
    if (n % 2 == 0) {
        NumValue comb = zeta_deriv_combination(y, cfg);
        Real acc = Real(f_poly(n, 1).evaluate(rat(1, 2))) + comb.value;
        return {{std::move(acc), comb.err + 1e-30}, false, DetPath::closed_form_r1};
    }

    // Odd n: Gamma_l(1/2) expansions contribute a rational power of 2 and
    // (2^{-k} - 1)-weighted zeta'(-k) terms.
    std::vector<Rational> weighted(y.size());
    Rational two_exp(0);
    for (std::size_t k = 0; k < y.size(); ++k) {
        Rational two_pow = rat_pow(rat(1, 2), static_cast<long>(k));
        weighted[k] = (two_pow - 1) * y[k];
        two_exp -= two_pow * bernoulli_number(static_cast<unsigned>(k + 1)) / Rational(static_cast<long>(k) + 1) * y[k];
    }
    NumValue comb = zeta_deriv_combination(weighted, cfg);
    Real acc = Real(two_exp) * log(Real(2L)) + comb.value;
    return {{std::move(acc), comb.err + 1e-30}, false, DetPath::closed_form_r1};
}

} // namespace zetadet
