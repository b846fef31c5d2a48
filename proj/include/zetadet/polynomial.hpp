#pragma once

#include "zetadet/rational.hpp"

#include <string>
#include <vector>

namespace zetadet {

// Dense univariate polynomial over Rational, coefficient index = degree.
// The coefficient list never ends in a zero; the zero polynomial has an
// empty list and degree() == -1. Degrees in this project stay small
// (below ~50), so dense storage is the right trade.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(const Rational& constant);
    explicit RationalPolynomial(long constant) : RationalPolynomial(Rational(constant)) {}

    static RationalPolynomial from_coeffs(std::vector<Rational> coeffs);
    static RationalPolynomial monomial(const Rational& coeff, int degree);
    static RationalPolynomial variable() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of x^i; zero outside the stored range.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    RationalPolynomial operator-() const;
    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const RationalPolynomial& o);
    RationalPolynomial& operator*=(const Rational& c);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(const Rational& c, RationalPolynomial p) { return p *= c; }
    friend RationalPolynomial operator*(RationalPolynomial p, const Rational& c) { return p *= c; }

    bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RationalPolynomial& o) const { return !(*this == o); }

    RationalPolynomial pow(unsigned e) const;
    RationalPolynomial derivative() const;

    // q(x) = p(o(x)).
    RationalPolynomial compose(const RationalPolynomial& o) const;
    // q(x) = p(x + c).
    RationalPolynomial shift_argument(const Rational& c) const;
    // q(x) = p(-x).
    RationalPolynomial negate_argument() const;

    Rational evaluate(const Rational& x) const;

    // Horner evaluation in any ring T constructible from Rational.
    template <class T>
    T evaluate_as(const T& x) const {
        T acc = T(Rational(0));
        for (int i = degree(); i >= 0; --i) acc = acc * x + T(coeffs_[static_cast<size_t>(i)]);
        return acc;
    }

    bool is_even() const;
    bool is_odd() const;

    // Ascending-degree rendering, e.g. "-1/12 + s^2".
    std::string str(const std::string& var = "s") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// C(x + shift, n) = (x+shift)(x+shift-1)...(x+shift-n+1)/n! as a polynomial
// in x; half-integer shifts stay exact.
RationalPolynomial binomial_poly(const Rational& shift, unsigned n);

} // namespace zetadet
