#pragma once

#include "zetadet/polynomial.hpp"
#include "zetadet/rational.hpp"

#include <vector>

namespace zetadet {

// Exact polynomial families underlying the sphere-determinant factorization.
// Family accessors return the zero polynomial outside their validity range
// wherever the value is zero by convention; they throw only where no
// convention exists (d_det_coeffs/y_det_coeffs below).

// Half-integer offset (n-1)/2 shared by the whole module.
inline Rational n_check(int n) { return rat(n - 1, 2); }
inline Rational xi_plus(int n, const Rational& s) { return Rational(1) + n_check(n) + s; }
inline Rational xi_minus(int n, const Rational& s) { return Rational(1) + n_check(n) - s; }

// Multiplicity generator P_n(z) = C(z + (n-1)/2 + 1, n) - C(z + (n-1)/2 - 1, n),
// degree n-1.
RationalPolynomial p_n(int n);

// T_{n,d}(s): expansion coefficients of P_n in powers of (z - s).
// T_{n,0} = P_n(s); T_{n,d} = T_{n,0}^{(d)}/d!. Zero for d < 0 or d >= n.
RationalPolynomial t_poly(int n, int d);

// f_{n,r}(s), degree 2r+n-1; identically zero for odd n, even otherwise.
RationalPolynomial f_poly(int n, int r);

// alpha_{n,r}(s,k), zero outside r <= k <= 2r+n-2.
RationalPolynomial alpha_poly(int n, int r, int k);

// c^k_n(l) by its difference equation; zero for l < 0 or l > k.
Rational ckn(int k, int n, int l);

// beta_{n,r}(s,l), zero outside 1 <= l <= n+2r-2. Even in s.
RationalPolynomial beta_poly(int n, int r, int l);

// b_{n,k}(z) from C(m+n-1, n-1) = sum_k b_{n,k}(z) (m+z)^k; zero outside
// 0 <= k <= n-1.
RationalPolynomial b_barnes(int n, int k);

// c_{r,l}(z) = sum_{k=0}^{l-1} C(l-1,k) (-1)^k (z-k-1)^{r-1}; zero outside
// 1 <= l <= r.
RationalPolynomial c_milnor(int r, int l);

// Exponents d_n(0..n-1) of zeta'(-k) in the closed form of det(Laplacian);
// requires n >= 2 (n = 1 is the closed value 4 pi^2).
std::vector<Rational> d_det_coeffs(int n);

// Exponent data y_n(0..n-1) for the closed form of det(conformal Laplacian);
// requires n >= 3 (n = 1, 2 are closed values).
std::vector<Rational> y_det_coeffs(int n);

} // namespace zetadet
