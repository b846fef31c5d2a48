#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetadet/combinatorics.hpp"
#include "zetadet/polynomial.hpp"
#include "zetadet/rational.hpp"

#include <vector>

using namespace zetadet;

namespace {

// Exact power-series division oracle for the Bernoulli generating function:
// expands t e^{tz}/(e^t - 1) (coefficients polynomial in z) to the given
// order and returns B_k(z)/k!.
std::vector<RationalPolynomial> bernoulli_gf_oracle(int order) {
    // numerator t e^{tz}: coefficient of t^k is z^{k-1}/(k-1)!.
    std::vector<RationalPolynomial> num(static_cast<size_t>(order) + 2);
    for (int k = 1; k <= order + 1; ++k)
        num[static_cast<size_t>(k)] =
            RationalPolynomial::monomial(rat(Integer(1), factorial(static_cast<unsigned long>(k - 1))), k - 1);
    // denominator (e^t - 1)/t: coefficient of t^k is 1/(k+1)!.
    std::vector<Rational> den(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) den[static_cast<size_t>(k)] = rat(Integer(1), factorial(static_cast<unsigned long>(k + 1)));
    // series division: q = (num/t) / den, i.e. q_k = num_{k+1} - sum den_j q_{k-j}.
    std::vector<RationalPolynomial> q(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        RationalPolynomial acc = num[static_cast<size_t>(k + 1)];
        for (int j = 1; j <= k; ++j) acc -= den[static_cast<size_t>(j)] * q[static_cast<size_t>(k - j)];
        q[static_cast<size_t>(k)] = acc; // den[0] = 1
    }
    return q;
}

} // namespace

TEST_CASE("rational helpers") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(-2, 4).get_den() == 2);
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(rat_pow(rat(5), 0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(Integer(7), 3) == 35);
    CHECK(rising_factorial(3, 4) == 3 * 4 * 5 * 6);

    CHECK(parse_rational("3/4").value() == rat(3, 4));
    CHECK(parse_rational("-7").value() == rat(-7));
    CHECK(!parse_rational("0.25"));
    CHECK(!parse_rational("1/"));
    CHECK(fraction_string(rat(5)) == "5/1");
    CHECK(pretty_string(rat(-1, 12)) == "-1/12");
}

TEST_CASE("bernoulli numbers follow the t e^t/(e^t-1) convention") {
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == rat(1, 2));
    CHECK(bernoulli_number(4) == rat(-1, 30));

    // Generating-function oracle: B_k = k! * [t^k] of t e^t/(e^t - 1).
    auto series = bernoulli_gf_oracle(12);
    for (int k = 0; k <= 12; ++k) {
        Rational from_series =
            series[static_cast<size_t>(k)].evaluate(Rational(1)) * rat(factorial(static_cast<unsigned long>(k)));
        CHECK(bernoulli_number(static_cast<unsigned>(k)) == from_series);
    }
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_polynomial(0) == RationalPolynomial(Rational(1)));
    CHECK(bernoulli_polynomial(1) == RationalPolynomial::from_coeffs({rat(-1, 2), rat(1)}));

    auto series = bernoulli_gf_oracle(8);
    for (int k = 0; k <= 8; ++k)
        CHECK(bernoulli_polynomial(static_cast<unsigned>(k)) ==
              series[static_cast<size_t>(k)] * rat(factorial(static_cast<unsigned long>(k))));

    for (unsigned k = 0; k <= 20; ++k)
        CHECK(bernoulli_polynomial(k).evaluate(Rational(1)) == bernoulli_number(k));
}

TEST_CASE("stirling numbers of the first kind, signed") {
    CHECK(stirling_first(3, 3) == 1);
    CHECK(stirling_first(3, 2) == -3);
    CHECK(stirling_first(4, 1) == -6);
    CHECK(stirling_first(5, -1) == 0);
    CHECK(stirling_first(5, 6) == 0);

    // (w)_n rebuilt from the expansion, coefficientwise, n <= 12.
    for (unsigned n = 0; n <= 12; ++n) {
        RationalPolynomial rising(Rational(1));
        for (unsigned i = 0; i < n; ++i)
            rising *= RationalPolynomial::from_coeffs({Rational(static_cast<long>(i)), Rational(1)});
        for (long m = 0; m <= static_cast<long>(n); ++m) {
            Rational expect = rising.coeff(static_cast<int>(m));
            Rational got = rat(stirling_first(n, m));
            if ((static_cast<long>(n) + m) % 2 != 0) got = -got;
            CHECK(got == expect);
        }
    }
}

TEST_CASE("harmonic sums with the degenerate conventions") {
    CHECK(harmonic(1, 3) == rat(11, 6));
    CHECK(harmonic(3, 2) == 0);
    CHECK(harmonic(1, 0) == 0);
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(-3) == 0);
    CHECK(harmonic(4) == rat(25, 12));

    for (long m = 1; m <= 6; ++m)
        for (long n = m; n <= 15; ++n)
            for (long p = n + 1; p <= 30; p += 7)
                CHECK(harmonic(m, n) + harmonic(n + 1, p) == harmonic(m, p));
}

TEST_CASE("polynomial arithmetic") {
    const RationalPolynomial z = RationalPolynomial::variable();

    CHECK((z * z).derivative() == Rational(2) * z);
    CHECK(z.shift_argument(Rational(1)).evaluate(Rational(0)) == 1);
    CHECK(RationalPolynomial::from_coeffs({rat(-1, 2), rat(1)}).evaluate(rat(1, 2)) == 0);

    RationalPolynomial p = RationalPolynomial::from_coeffs({rat(1), rat(-2), rat(3)});
    CHECK(p.degree() == 2);
    CHECK(p.compose(z.shift_argument(rat(5))) == p.shift_argument(rat(5)));
    CHECK(p.pow(3) == p * p * p);
    CHECK(p.negate_argument().negate_argument() == p);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);

    // Construction-order independence.
    RationalPolynomial q = RationalPolynomial::from_coeffs({rat(2, 3), rat(7)});
    CHECK((p + q) * p == p * p + q * p);
    CHECK(p * q == q * p);

    CHECK(binomial_poly(rat(3, 2), 2) ==
          RationalPolynomial::from_coeffs({rat(3, 8), rat(1), rat(1, 2)}));

    CHECK(p.str("s") == "1 - 2s + 3s^2");
    CHECK(RationalPolynomial().str() == "0");
    CHECK(RationalPolynomial::from_coeffs({rat(-1, 12), rat(0), rat(1)}).str() == "-1/12 + s^2");
}

TEST_CASE("polynomial ring properties on generated inputs") {
    // Hand-rolled deterministic generator: small rationals from an LCG.
    unsigned long state = 20260808;
    auto next = [&state]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    auto rand_rat = [&]() {
        long num = static_cast<long>(next() % 41) - 20;
        long den = static_cast<long>(next() % 9) + 1;
        return rat(num, den);
    };
    auto rand_poly = [&]() {
        std::vector<Rational> c(next() % 6);
        for (auto& x : c) x = rand_rat();
        return RationalPolynomial::from_coeffs(std::move(c));
    };

    for (int trial = 0; trial < 200; ++trial) {
        RationalPolynomial a = rand_poly(), b = rand_poly(), c = rand_poly();
        Rational x = rand_rat(), s = rand_rat();

        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
        CHECK(a.shift_argument(s).evaluate(x) == a.evaluate(x + s));
        CHECK(a.compose(b).evaluate(x) == a.evaluate(b.evaluate(x)));
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        CHECK(a.negate_argument().evaluate(x) == a.evaluate(-x));
    }
}

TEST_CASE("polynomial parity helpers") {
    CHECK(RationalPolynomial::from_coeffs({rat(1), rat(0), rat(2)}).is_even());
    CHECK(!RationalPolynomial::from_coeffs({rat(1), rat(1)}).is_even());
    CHECK(RationalPolynomial::from_coeffs({rat(0), rat(5)}).is_odd());
    CHECK(RationalPolynomial().is_even());
    CHECK(RationalPolynomial().is_odd());
}
