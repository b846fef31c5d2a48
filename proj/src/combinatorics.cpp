#include "zetadet/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace zetadet {

namespace {

// B^-_k (the t/(e^t - 1) convention) via the classical recurrence
// sum_{j=0}^{m} C(m+1, j) B^-_j = 0. Internal only: the public accessor
// converts to the library convention before anything else sees the value.
class BernoulliCache {
public:
    Rational minus(unsigned k) {
        std::lock_guard<std::mutex> lock(mu_);
        extend(k);
        return values_[k];
    }

private:
    void extend(unsigned k) {
        if (values_.empty()) values_.push_back(Rational(1));
        for (unsigned m = static_cast<unsigned>(values_.size()); m <= k; ++m) {
            Rational acc(0);
            for (unsigned j = 0; j < m; ++j) acc += rat(binomial(Integer(m + 1), j)) * values_[j];
            values_.push_back(-acc / rat(static_cast<long>(m) + 1));
        }
    }

    std::mutex mu_;
    std::vector<Rational> values_;
};

BernoulliCache& bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

// Unsigned Stirling-first triangle c(n, m): c(n, m) = (n-1) c(n-1, m) + c(n-1, m-1).
class StirlingCache {
public:
    Integer unsigned_value(unsigned n, unsigned m) {
        std::lock_guard<std::mutex> lock(mu_);
        extend(n);
        return rows_[n][m];
    }

private:
    void extend(unsigned n) {
        if (rows_.empty()) rows_.push_back({Integer(1)});
        for (unsigned i = static_cast<unsigned>(rows_.size()); i <= n; ++i) {
            std::vector<Integer> row(i + 1, Integer(0));
            for (unsigned m = 1; m <= i; ++m) {
                row[m] = rows_[i - 1][m - 1];
                if (m < i) row[m] += Integer(i - 1) * rows_[i - 1][m];
            }
            rows_.push_back(std::move(row));
        }
    }

    std::mutex mu_;
    std::vector<std::vector<Integer>> rows_;
};

StirlingCache& stirling_cache() {
    static StirlingCache cache;
    return cache;
}

class HarmonicCache {
public:
    Rational value(long n) {
        if (n <= 0) return Rational(0);
        std::lock_guard<std::mutex> lock(mu_);
        if (values_.empty()) values_.push_back(Rational(0));
        for (long j = static_cast<long>(values_.size()); j <= n; ++j)
            values_.push_back(values_.back() + rat(1, j));
        return values_[static_cast<size_t>(n)];
    }

private:
    std::mutex mu_;
    std::vector<Rational> values_;
};

HarmonicCache& harmonic_cache() {
    static HarmonicCache cache;
    return cache;
}

} // namespace

Rational bernoulli_number(unsigned k) {
    if (k == 1) return rat(1, 2);
    return bernoulli_cache().minus(k);
}

RationalPolynomial bernoulli_polynomial(unsigned k) {
    // B_k(z) = sum_j C(k, j) B^-_j z^{k-j}.
    std::vector<Rational> coeffs(k + 1, Rational(0));
    for (unsigned j = 0; j <= k; ++j)
        coeffs[k - j] = rat(binomial(Integer(k), j)) * bernoulli_cache().minus(j);
    return RationalPolynomial::from_coeffs(std::move(coeffs));
}

Integer stirling_first(unsigned n, long m) {
    if (m < 0 || m > static_cast<long>(n)) return Integer(0);
    Integer c = stirling_cache().unsigned_value(n, static_cast<unsigned>(m));
    return ((static_cast<long>(n) - m) % 2 == 0) ? c : -c;
}

Rational harmonic(long n) { return harmonic_cache().value(n); }

Rational harmonic(long m, long n) {
    if (m > n) return Rational(0);
    return harmonic_cache().value(n) - harmonic_cache().value(m - 1);
}

} // namespace zetadet
