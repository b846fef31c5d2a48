#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace zetadet {

// Exact arithmetic substrate. Integer/Rational are GMP-backed; every
// operation in the exact layer is exact (no rounding anywhere). Rationals
// are kept canonical: lowest terms, denominator > 0.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// q^e for integer e (negative e inverts; 0^negative is a domain error upstream).
Rational rat_pow(const Rational& q, long e);

Integer factorial(unsigned long n);

// binomial(n, k) with integer upper argument; 0 for k < 0 handled by caller.
Integer binomial(const Integer& n, unsigned long k);

// Rising factorial (a)_m = a (a+1) ... (a+m-1) over the integers.
Integer rising_factorial(long a, unsigned long m);

// Parses "p" or "p/q" (exact rational string). Returns nullopt for anything
// else, in particular decimal strings, which callers treat as floats.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical "p/q" rendering (always includes the denominator).
std::string fraction_string(const Rational& q);

// Human rendering: "p" when the denominator is 1, else "p/q".
std::string pretty_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace zetadet
