#include "zetadet/sphere_polynomials.hpp"

#include "zetadet/combinatorics.hpp"
#include "zetadet/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace zetadet {

namespace {

std::mutex g_family_mu;

const std::vector<RationalPolynomial>& t_ladder(int n) {
    static std::map<int, std::vector<RationalPolynomial>> cache;
    std::lock_guard<std::mutex> lock(g_family_mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<RationalPolynomial> ladder;
    ladder.reserve(static_cast<size_t>(n));
    ladder.push_back(p_n(n)); // T_{n,0}(s) = P_n(s)
    for (int d = 1; d < n; ++d) {
        RationalPolynomial next = ladder.back().derivative() * rat(1, d);
        ladder.push_back(std::move(next));
    }
    return cache.emplace(n, std::move(ladder)).first->second;
}

} // namespace

RationalPolynomial p_n(int n) {
    if (n < 1) throw domain_error("p_n: n must be >= 1");
    const Rational nc = n_check(n);
    return binomial_poly(nc + 1, static_cast<unsigned>(n)) - binomial_poly(nc - 1, static_cast<unsigned>(n));
}

RationalPolynomial t_poly(int n, int d) {
    if (n < 1) throw domain_error("t_poly: n must be >= 1");
    if (d < 0 || d >= n) return RationalPolynomial();
    return t_ladder(n)[static_cast<size_t>(d)];
}

RationalPolynomial f_poly(int n, int r) {
    if (n < 1 || r < 1) throw domain_error("f_poly: need n >= 1 and r >= 1");
    const RationalPolynomial two_s = RationalPolynomial::monomial(Rational(2), 1);
    RationalPolynomial acc;
    for (int d = 1; d < n; ++d) {
        Rational coef = rat(factorial(static_cast<unsigned long>(r - 1)),
                            2 * rising_factorial(r + d, static_cast<unsigned long>(r)));
        if ((r + d) % 2 != 0) coef = -coef;
        coef *= harmonic(r, r + d - 1);
        acc += coef * two_s.pow(static_cast<unsigned>(2 * r + d - 1)) * t_poly(n, d);
    }
    return acc;
}

RationalPolynomial alpha_poly(int n, int r, int k) {
    if (n < 1 || r < 1) throw domain_error("alpha_poly: need n >= 1 and r >= 1");
    if (k < r || k > 2 * r + n - 2) return RationalPolynomial();
    const RationalPolynomial two_s = RationalPolynomial::monomial(Rational(2), 1);
    RationalPolynomial acc;
    const int jmax = std::min(r - 1, k - r);
    for (int j = 0; j <= jmax; ++j) {
        RationalPolynomial term = rat(binomial(Integer(r - 1), static_cast<unsigned long>(j))) *
                                  two_s.pow(static_cast<unsigned>(r - 1 - j)) * t_poly(n, k - r - j);
        acc += term;
    }
    if ((n + k + 1) % 2 != 0) acc = -acc;
    return acc;
}

Rational ckn(int k, int n, int l) {
    if (k < 0 || n < 1) throw domain_error("ckn: need k >= 0 and n >= 1");
    if (l < 0 || l > k) return Rational(0);
    // Row-by-row difference equation from c^0_n(0) = 2.
    std::vector<Rational> row{Rational(2)};
    for (int i = 1; i <= k; ++i) {
        std::vector<Rational> next(static_cast<size_t>(i) + 1);
        next[0] = Rational(n) * row[0] - Rational(n - 1);
        for (int j = 1; j < i; ++j)
            next[static_cast<size_t>(j)] =
                Rational(n + j) * row[static_cast<size_t>(j)] - Rational(n + j - 1) * row[static_cast<size_t>(j) - 1];
        next[static_cast<size_t>(i)] = -Rational(n + i - 1) * row[static_cast<size_t>(i) - 1];
        row = std::move(next);
    }
    return row[static_cast<size_t>(l)];
}

RationalPolynomial beta_poly(int n, int r, int l) {
    if (n < 1 || r < 1) throw domain_error("beta_poly: need n >= 1 and r >= 1");
    if (l < 1 || l > n + 2 * r - 2) return RationalPolynomial();

    const Rational nc = n_check(n);
    const RationalPolynomial s = RationalPolynomial::variable();
    // n_check^2 - s^2
    const RationalPolynomial disc = RationalPolynomial(nc * nc) - s * s;

    if (l <= n - 1) return -disc.pow(static_cast<unsigned>(r - 1));

    const RationalPolynomial xi_p = RationalPolynomial(Rational(1) + nc) + s;
    const RationalPolynomial xi_m = RationalPolynomial(Rational(1) + nc) - s;
    RationalPolynomial acc;
    for (int k = l - n; k <= 2 * r - 2; ++k) {
        RationalPolynomial inner;
        for (int p = 0; p <= r - 1; ++p) {
            const int q = k - p;
            if (q < 0 || q > r - 1) continue;
            Rational c = rat(binomial(Integer(r - 1), static_cast<unsigned long>(p)) *
                             binomial(Integer(r - 1), static_cast<unsigned long>(q)));
            inner += c * xi_p.pow(static_cast<unsigned>(r - 1 - p)) * xi_m.pow(static_cast<unsigned>(r - 1 - q));
        }
        Rational c = ckn(k, n, l - n);
        if (k % 2 != 0) c = -c;
        acc += c * inner;
    }
    return -acc;
}

RationalPolynomial b_barnes(int n, int k) {
    if (n < 1) throw domain_error("b_barnes: n must be >= 1");
    if (k < 0 || k > n - 1) return RationalPolynomial();
    RationalPolynomial acc;
    for (int j = k; j <= n - 1; ++j) {
        Rational c = rat(binomial(Integer(j), static_cast<unsigned long>(k)) *
                             stirling_first(static_cast<unsigned>(n), j + 1),
                         factorial(static_cast<unsigned long>(n - 1)));
        acc += RationalPolynomial::monomial(c, j - k);
    }
    if ((n - 1 - k) % 2 != 0) acc = -acc;
    return acc;
}

RationalPolynomial c_milnor(int r, int l) {
    if (r < 1) throw domain_error("c_milnor: r must be >= 1");
    if (l < 1 || l > r) return RationalPolynomial();
    RationalPolynomial acc;
    const RationalPolynomial z = RationalPolynomial::variable();
    for (int k = 0; k <= l - 1; ++k) {
        RationalPolynomial shifted = (z - RationalPolynomial(Rational(k + 1))).pow(static_cast<unsigned>(r - 1));
        Rational c = rat(binomial(Integer(l - 1), static_cast<unsigned long>(k)));
        if (k % 2 != 0) c = -c;
        acc += c * shifted;
    }
    return acc;
}

std::vector<Rational> d_det_coeffs(int n) {
    if (n < 2) throw domain_error("d_det_coeffs: n must be >= 2 (n = 1 is the closed value 4*pi^2)");
    const RationalPolynomial z = RationalPolynomial::variable();
    const RationalPolynomial first =
        binomial_poly(Rational(n - 2), static_cast<unsigned>(n - 1)) *
        (RationalPolynomial(Rational(n - 1)) + Rational(2) * z);
    const RationalPolynomial second =
        binomial_poly(Rational(n - 2), static_cast<unsigned>(n - 1)).negate_argument() *
        (RationalPolynomial(Rational(n - 1)) - Rational(2) * z);
    RationalPolynomial numerator = -first;
    if (n % 2 == 0)
        numerator -= second;
    else
        numerator += second;
    // The numerator vanishes at z = 0; dividing by z is a coefficient shift.
    if (numerator.coeff(0) != 0) throw std::logic_error("d_det_coeffs: numerator not divisible by z");
    std::vector<Rational> out(static_cast<size_t>(n), Rational(0));
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = numerator.coeff(i + 1);
    return out;
}

std::vector<Rational> y_det_coeffs(int n) {
    if (n < 3) throw domain_error("y_det_coeffs: n must be >= 3 (n = 1, 2 are closed values)");
    const bool odd = (n % 2 != 0);
    const int m = odd ? (n - 1) / 2 : n / 2;

    auto bin_or_zero = [](long top, long k) -> Rational {
        if (k < 0 || k > top) return Rational(0);
        return rat(binomial(Integer(top), static_cast<unsigned long>(k)));
    };

    // Exponents q_n(l) of Gamma_l at the common half-/whole-integer argument,
    // produced by running the ladder relation down the factorization.
    auto q = [&](int l) -> Rational {
        Rational v;
        if (odd) {
            v = bin_or_zero(m - 1, l - m) + Rational(4) * bin_or_zero(m, l - m - 1);
            if (l % 2 != 0) v = -v;
        } else {
            v = bin_or_zero(m - 2, l - m) + Rational(4) * bin_or_zero(m - 1, l - m - 1);
            if (l % 2 == 0) v = -v;
        }
        return v;
    };

    const Rational arg = odd ? rat(1, 2) : Rational(1);
    std::vector<Rational> out(static_cast<size_t>(n), Rational(0));
    for (int k = 0; k < n; ++k) {
        Rational acc(0);
        for (int l = k + 1; l <= n; ++l) acc += b_barnes(l, k).evaluate(arg) * q(l);
        out[static_cast<size_t>(k)] = acc;
    }
    return out;
}

} // namespace zetadet
