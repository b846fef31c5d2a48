#pragma once

#include "zetadet/quadrature.hpp"
#include "zetadet/spectral.hpp"

#include <string>
#include <vector>

namespace zetadet {

// One verification record. For exact (rational) checks, tolerance is 0 and
// abs_diff is 0 or 1.
struct OracleReport {
    std::string quantity;
    std::string main_value;
    std::string oracle_value;
    double abs_diff = 0;
    double tolerance = 0;
    bool passed = false;
};

// log Det_r(L_n(s)) recomputed by differentiating the convergent series
// representation term by term: binomial-derivative weights against zeta and
// zeta' values at shifted integer orders, with the pole-adjacent term's
// finite limit spelled out against digamma. Shares only the Hurwitz kernel
// with the production path, none of the gamma assembly. Requires |s| < 1/3.
NumValue oracle_log_det(int n, int r, const Real& s, const EMConfig& cfg);

// Phi^m_r(t, z): the r-fold iterated integral of xi^m psi(xi+z), collapsed
// to a single weighted integral by the Cauchy repeated-integration formula
// and evaluated by adaptive quadrature.
NumValue phi_quadrature(int m, int r, const Real& t, const Real& z, const EMConfig& cfg);

// Quadrature vs closed form of Phi^m_r.
OracleReport check_phi(int m, int r, const Real& t, const Real& z, double tolerance, const EMConfig& cfg);

// Quadrature vs closed form of int_0^t xi^m log G_r(xi+z) dxi.
OracleReport check_int_mg_lemma(int r, int m, const Real& t, const Real& z, double tolerance,
                                const EMConfig& cfg);

// Exact brute-force sums against the closed forms of the factorial sums
// I_r(k), J_r(k) and K^m_r(l), plus the c^k_n recurrence/closed-form match.
std::vector<OracleReport> check_combinatorial_lemmas(int max_r, int max_k, int max_m);

// Named suites behind the `verify` command.
std::vector<OracleReport> verify_determinants(const EMConfig& cfg);
std::vector<OracleReport> verify_phi(const EMConfig& cfg);
std::vector<OracleReport> verify_combinatorics();
std::vector<OracleReport> verify_polynomials();
std::vector<OracleReport> verify_gammas(const EMConfig& cfg);
std::vector<OracleReport> verify_all(const EMConfig& cfg);

} // namespace zetadet
