#pragma once

#include "zetadet/polynomial.hpp"
#include "zetadet/rational.hpp"

namespace zetadet {

// Bernoulli number B_k under the convention t e^t/(e^t - 1), i.e. B_k = B_k(1)
// and B_1 = +1/2. This convention is fixed library-wide; the t/(e^t - 1)
// variant is never exposed. Memoized.
Rational bernoulli_number(unsigned k);

// Bernoulli polynomial B_k(z) from t e^{tz}/(e^t - 1). B_k(1) = bernoulli_number(k).
RationalPolynomial bernoulli_polynomial(unsigned k);

// Signed Stirling number of the first kind s(n, m), matching the expansion
// (w)_n = sum_m (-1)^{n+m} s(n,m) w^m of the rising factorial. Zero outside
// 0 <= m <= n. Memoized.
Integer stirling_first(unsigned n, long m);

// H(n) = sum_{j=1}^{n} 1/j, with H(n) = 0 for n <= 0.
Rational harmonic(long n);

// H(m, n) = sum_{j=m}^{n} 1/j = H(n) - H(m-1), zero when m > n.
Rational harmonic(long m, long n);

} // namespace zetadet
