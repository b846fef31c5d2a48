#pragma once

#include "zetadet/hurwitz.hpp"
#include "zetadet/polynomial.hpp"
#include "zetadet/real.hpp"

#include <optional>
#include <vector>

namespace zetadet {

// Evaluation point that stays exact when it was given as a rational. All
// polynomial exponents are then evaluated in exact arithmetic and floated
// once; only the zeta kernel runs in floating point.
struct Arg {
    std::optional<Rational> exact;
    Real approx;

    static Arg of(const Rational& q) { return Arg{q, Real(q)}; }
    static Arg of(const Real& x) { return Arg{std::nullopt, x}; }
    bool positive() const { return approx > 0; }
};

inline Arg arg_add(const Arg& a, const Rational& c) {
    if (a.exact) return Arg::of(Rational(*a.exact + c));
    return Arg::of(a.approx + Real(c));
}

inline Arg arg_add(const Arg& a, const Arg& b) {
    if (a.exact && b.exact) return Arg::of(Rational(*a.exact + *b.exact));
    return Arg::of(a.approx + b.approx);
}

inline Arg arg_neg(const Arg& a) {
    if (a.exact) return Arg::of(Rational(-*a.exact));
    return Arg::of(-a.approx);
}

inline Arg arg_scale(const Arg& a, const Rational& c) {
    if (a.exact) return Arg::of(Rational(*a.exact * c));
    return Arg::of(a.approx * Real(c));
}

// p evaluated at the argument: exact Horner + one rounding when possible.
Real eval_poly(const RationalPolynomial& p, const Arg& z);

// t^j for j = 0..max_pow, exact-then-floated when t is rational.
std::vector<Real> power_table(const Arg& t, int max_pow);

// Barnes multiple zeta zeta_n(w, z) as a b_{n,k}-weighted combination of
// Hurwitz zetas. w in {1, ..., n} hits a pole.
NumValue barnes_zeta(int n, const Real& w, const Arg& z, const EMConfig& cfg);

// log Gamma_n(z); n = 0 is the convention Gamma_0(z) = 1/z. All gamma-type
// quantities live in log space; exponentiation happens at the presentation
// layer only.
NumValue log_barnes_gamma(int n, const Arg& z, const EMConfig& cfg);

// log Gamma_l(z) for l = 1..max_l, sharing the zeta'(-k, z) evaluations.
std::vector<NumValue> barnes_log_table(int max_l, const Arg& z, const EMConfig& cfg);

// log of the depth-r Milnor gamma via the Barnes-product reduction
// G_r(z) = prod_l Gamma_l(z)^{c_{r,l}(z)}.
NumValue log_milnor_gamma(int r, const Arg& z, const EMConfig& cfg);

// log G_r(z) for r = 1..max_r, sharing one Barnes table.
std::vector<NumValue> milnor_log_table(int max_r, const Arg& z, const EMConfig& cfg);

// Definitional route log G_r(z) = zeta'(1-r, z), kept as the cross-check
// against the reduction.
NumValue log_milnor_gamma_direct(int r, const Arg& z, const EMConfig& cfg);

// Closed form of the r-fold iterated integral Phi^m_r(t, z) of xi^m psi(xi+z):
// a C(m, k-r)-weighted product of Milnor gammas at t+z plus an explicit
// polynomial part with Milnor gammas at z. Vanishes at t = 0.
NumValue milnor_phi_closed(int m, int r, const Arg& t, const Arg& z, const EMConfig& cfg);

// Closed form of int_0^t xi^m log G_r(xi + z) dxi.
NumValue milnor_int_closed(int r, int m, const Arg& t, const Arg& z, const EMConfig& cfg);

struct LadderReport {
    double residual = 0;
    double tolerance = 0;
    bool passed = false;
};

// Residual of log Gamma_n(z+m) - sum_{l=0}^{m} (-1)^l C(m,l) log Gamma_{n-l}(z),
// the m-fold ladder relation (m = 1 is the plain ladder).
LadderReport ladder_check(int n, const Arg& z, int m, double tolerance, const EMConfig& cfg);

} // namespace zetadet
