#pragma once

#include "zetadet/multigamma.hpp"

#include <string>

namespace zetadet {

// A determinant request: sphere dimension n, shift s in I_n = (-nc-1, nc+1)
// with nc = (n-1)/2, and depth r >= 1. s = nc reproduces the Laplacian,
// s = 1/2 the conformal Laplacian.
struct SphereProblem {
    int n = 2;
    Arg s = Arg::of(Rational(0));
    int r = 1;

    void validate() const; // throws domain_error outside I_n or for bad n, r
};

enum class DetPath { factorization, closed_form_r1, oracle };

std::string to_string(DetPath path);

struct DetResult {
    NumValue log_det;
    bool prefactor_active = false;
    DetPath path = DetPath::factorization;
};

// Sphere spectrum: k-th eigenvalue k(k+n-1) and its multiplicity
// C(n+k, n) - C(n+k-2, n) (combinatorial convention, so multiplicity(n,0) = 1).
long eigenvalue(int n, long k);
Integer multiplicity(int n, long k);

// Two-variable Hurwitz zeta H_{a1,a2}(w1,w2) continued by the binomial
// series in (a2 - a1); requires |a2 - a1| < min(1, a2). Integer w1+w2 <= 1
// sits on a singular line.
NumValue two_var_hurwitz(const Real& a1, const Real& a2, const Real& w1, const Real& w2,
                         const EMConfig& cfg);

// zeta~_{L_n(s)}(1-r) as an exact polynomial in s (it is rational for
// rational s); reduces to -(nc^2 - s^2)^{r-1} for odd n.
RationalPolynomial zeta_tilde_polynomial(int n, int r);
Rational zeta_tilde_value(int n, const Rational& s, int r);

// log I^d_{n,r}(s), the building block exp(-dH/dw) of the factorization.
// gamma_product assembles the Milnor-gamma product form; h_series sums the
// five closed-form pieces of the w-derivative split. The two routes are the
// two sides of the underlying proposition and must agree.
enum class IdPath { gamma_product, h_series };
NumValue log_I_d(int n, int r, int d, const Arg& s, IdPath path, const EMConfig& cfg);

// log Det_r(L_n(s)) via the Barnes-gamma factorization: the delta-gated
// prefactor, f_{n,r}(s), and the beta-weighted Gamma_l(xi+-) products.
DetResult log_higher_det(const SphereProblem& problem, const EMConfig& cfg);

// det(Laplacian) and det(conformal Laplacian) on the n-sphere. closed_form_r1
// uses the zeta'(-k) expansions (4 pi^2 and 16 at n = 1); factorization goes
// through log_higher_det at s = nc resp. s = 1/2.
DetResult det_laplacian(int n, DetPath path, const EMConfig& cfg);
DetResult det_yamabe(int n, DetPath path, const EMConfig& cfg);

} // namespace zetadet
