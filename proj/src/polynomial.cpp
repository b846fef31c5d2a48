#include "zetadet/polynomial.hpp"

#include <sstream>

namespace zetadet {

RationalPolynomial::RationalPolynomial(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

RationalPolynomial RationalPolynomial::from_coeffs(std::vector<Rational> coeffs) {
    RationalPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

RationalPolynomial RationalPolynomial::monomial(const Rational& coeff, int degree) {
    RationalPolynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
        p.coeffs_.back() = coeff;
    }
    return p;
}

const Rational& RationalPolynomial::coeff(int i) const {
    static const Rational zero(0);
    if (i < 0 || i > degree()) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::operator-() const {
    RationalPolynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

RationalPolynomial RationalPolynomial::pow(unsigned e) const {
    RationalPolynomial acc(Rational(1));
    RationalPolynomial base(*this);
    while (e > 0) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (degree() < 1) return RationalPolynomial();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return from_coeffs(std::move(out));
}

RationalPolynomial RationalPolynomial::compose(const RationalPolynomial& o) const {
    RationalPolynomial acc;
    for (int i = degree(); i >= 0; --i) {
        acc *= o;
        acc += RationalPolynomial(coeffs_[static_cast<size_t>(i)]);
    }
    return acc;
}

RationalPolynomial RationalPolynomial::shift_argument(const Rational& c) const {
    RationalPolynomial x_plus_c = from_coeffs({c, Rational(1)});
    return compose(x_plus_c);
}

RationalPolynomial RationalPolynomial::negate_argument() const {
    RationalPolynomial p(*this);
    for (size_t i = 1; i < p.coeffs_.size(); i += 2) p.coeffs_[i] = -p.coeffs_[i];
    return p;
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[static_cast<size_t>(i)];
    return acc;
}

bool RationalPolynomial::is_even() const {
    for (size_t i = 1; i < coeffs_.size(); i += 2)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool RationalPolynomial::is_odd() const {
    for (size_t i = 0; i < coeffs_.size(); i += 2)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::string RationalPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        const bool unit = (a == 1) && i > 0;
        if (!unit) out << pretty_string(a);
        if (i >= 1) {
            // "2s" for integer coefficients, "1/12 s" for fractions.
            if (!unit && a.get_den() != 1) out << " ";
            out << var;
            if (i >= 2) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

RationalPolynomial binomial_poly(const Rational& shift, unsigned n) {
    RationalPolynomial p(Rational(1));
    for (unsigned i = 0; i < n; ++i) {
        Rational c = shift - Rational(static_cast<long>(i));
        p *= RationalPolynomial::from_coeffs({c, Rational(1)});
    }
    p *= rat(Integer(1), factorial(n));
    return p;
}

} // namespace zetadet
