#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetadet/combinatorics.hpp"
#include "zetadet/errors.hpp"
#include "zetadet/sphere_polynomials.hpp"
#include "zetadet/verification.hpp"

using namespace zetadet;

namespace {

// The raw double-sum definition of T_{n,d} through Stirling numbers, kept
// as an oracle against the derivative-ladder construction.
RationalPolynomial t_poly_stirling_oracle(int n, int d) {
    const Rational nc = n_check(n);
    RationalPolynomial acc;
    const RationalPolynomial up = RationalPolynomial::from_coeffs({Rational(1) - nc, Rational(1)});
    const RationalPolynomial down = RationalPolynomial::from_coeffs({Rational(-1) - nc, Rational(1)});
    for (int m = d + 1; m <= n; ++m) {
        Rational c = rat(binomial(Integer(m), static_cast<unsigned long>(d)) *
                         stirling_first(static_cast<unsigned>(n), m));
        if ((n + m) % 2 != 0) c = -c;
        acc += c * (up.pow(static_cast<unsigned>(m - d)) - down.pow(static_cast<unsigned>(m - d)));
    }
    return acc * rat(Integer(1), factorial(static_cast<unsigned long>(n)));
}

} // namespace

TEST_CASE("P_n basics") {
    CHECK(p_n(1) == RationalPolynomial(Rational(2)));
    CHECK(p_n(2) == RationalPolynomial::monomial(Rational(2), 1));
    for (int n = 1; n <= 10; ++n) {
        CHECK(p_n(n).degree() == n - 1);
        RationalPolynomial flipped = p_n(n).negate_argument();
        if ((n + 1) % 2 != 0) flipped = -flipped;
        CHECK(flipped == p_n(n));
    }
    CHECK_THROWS_AS(p_n(0), domain_error);
}

TEST_CASE("T_{n,d} against the Stirling double sum") {
    CHECK(t_poly(3, 0) == RationalPolynomial::monomial(Rational(1), 2));
    CHECK(t_poly(4, 1) == RationalPolynomial::from_coeffs({rat(-1, 12), rat(0), rat(1)}));
    CHECK(t_poly(6, 5) == RationalPolynomial(rat(1, 60)));
    CHECK(t_poly(3, -1).is_zero());
    CHECK(t_poly(3, 3).is_zero());

    for (int n = 1; n <= 8; ++n)
        for (int d = 0; d < n; ++d) CHECK(t_poly(n, d) == t_poly_stirling_oracle(n, d));
}

TEST_CASE("f_{n,r} behaviour") {
    for (int r = 1; r <= 5; ++r) CHECK(f_poly(3, r).is_zero());
    CHECK(f_poly(2, 1) == RationalPolynomial::monomial(Rational(2), 2));
    CHECK(f_poly(4, 1) == RationalPolynomial::from_coeffs({rat(0), rat(0), rat(-1, 12), rat(0), rat(2, 9)}));
    for (int n = 2; n <= 8; n += 2)
        for (int r = 1; r <= 3; ++r) {
            CHECK(f_poly(n, r).is_even());
            // top term (2s)^{2r+n-2} T_{n,n-1} survives
            CHECK(f_poly(n, r).degree() == 2 * r + n - 2);
        }
}

TEST_CASE("alpha basics") {
    CHECK(alpha_poly(1, 1, 1) == RationalPolynomial(Rational(-2)));
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            RationalPolynomial expect = t_poly(n, k - 1);
            if ((n + k + 1) % 2 != 0) expect = -expect;
            CHECK(alpha_poly(n, 1, k) == expect);
        }
    CHECK(alpha_poly(3, 2, 1).is_zero());
    CHECK(alpha_poly(3, 2, 6).is_zero());
}

TEST_CASE("c^k_n difference-equation values") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(ckn(0, n, 0) == 2);
        for (int k = 1; k <= 9; ++k) {
            CHECK(ckn(k, n, 0) == Rational(1) + rat_pow(Rational(n), k));
            Rational expect = rat(2 * rising_factorial(n, static_cast<unsigned long>(k)));
            if (k % 2 != 0) expect = -expect;
            CHECK(ckn(k, n, k) == expect);
            CHECK(ckn(k, n, k + 1) == 0);
            CHECK(ckn(k, n, -1) == 0);
        }
    }
}

TEST_CASE("beta special values") {
    for (int n = 1; n <= 6; ++n) {
        for (int l = 1; l < n; ++l) CHECK(beta_poly(n, 1, l) == RationalPolynomial(rat(-1)));
        CHECK(beta_poly(n, 1, n) == RationalPolynomial(rat(-2)));
        CHECK(beta_poly(n, 1, n + 1).is_zero());
        CHECK(beta_poly(n, 1, 0).is_zero());
    }
    const RationalPolynomial s = RationalPolynomial::variable();
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= 4; ++r) {
            const Rational nc = n_check(n);
            RationalPolynomial disc = RationalPolynomial(nc * nc) - s * s;
            CHECK(beta_poly(n, r, n) == rat(-2) * disc.pow(static_cast<unsigned>(r - 1)));
        }
    // l = n+1 at depth 3.
    for (long n = 1; n <= 6; ++n)
        CHECK(beta_poly(static_cast<int>(n), 3, static_cast<int>(n) + 1) ==
              RationalPolynomial::from_coeffs({rat(n * (n + 1) * (n * n + 1), 2), rat(0), rat(-2 * n * (n + 1))}));
}

TEST_CASE("b_{n,k} low cases") {
    CHECK(b_barnes(1, 0) == RationalPolynomial(Rational(1)));
    CHECK(b_barnes(2, 0) == RationalPolynomial::from_coeffs({rat(1), rat(-1)}));
    CHECK(b_barnes(2, 1) == RationalPolynomial(Rational(1)));
    CHECK(b_barnes(3, 5).is_zero());
    CHECK(b_barnes(3, -1).is_zero());
}

TEST_CASE("c_{r,l} low cases") {
    const RationalPolynomial z_minus_1 = RationalPolynomial::from_coeffs({rat(-1), rat(1)});
    for (int r = 1; r <= 6; ++r) {
        CHECK(c_milnor(r, r) == RationalPolynomial(rat(factorial(static_cast<unsigned long>(r - 1)))));
        // forced by the generating identity: the l = 1 weight is (z-1)^{r-1}
        CHECK(c_milnor(r, 1) == z_minus_1.pow(static_cast<unsigned>(r - 1)));
        if (r >= 2) {
            // c_{r,r-1}(z) = (2z - r)(r-1)!/2.
            RationalPolynomial expect =
                RationalPolynomial::from_coeffs({rat(-static_cast<long>(r), 2), rat(1)}) *
                rat(factorial(static_cast<unsigned long>(r - 1)));
            CHECK(c_milnor(r, r - 1) == expect);
        }
        CHECK(c_milnor(r, 0).is_zero());
        CHECK(c_milnor(r, r + 1).is_zero());
    }
}

TEST_CASE("determinant exponent data") {
    auto d2 = d_det_coeffs(2);
    CHECK(d2 == std::vector<Rational>{rat(0), rat(-4)});
    auto d3 = d_det_coeffs(3);
    CHECK(d3 == std::vector<Rational>{rat(-2), rat(0), rat(-2)});
    CHECK_THROWS_AS(d_det_coeffs(1), domain_error);

    auto y3 = y_det_coeffs(3);
    CHECK(y3 == std::vector<Rational>{rat(-1, 2), rat(0), rat(-2)});
    auto y4 = y_det_coeffs(4);
    CHECK(y4 == std::vector<Rational>{rat(0), rat(-1, 3), rat(0), rat(-2, 3)});
    CHECK_THROWS_AS(y_det_coeffs(2), domain_error);
}

TEST_CASE("full exact identity suite passes") {
    for (const OracleReport& r : verify_polynomials()) {
        INFO(r.quantity);
        CHECK(r.passed);
    }
}
