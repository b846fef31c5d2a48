#include "zetadet/rational.hpp"

#include "zetadet/errors.hpp"

#include <regex>

namespace zetadet {

Rational rat_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    const bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && q == 0) throw domain_error("rat_pow: 0 raised to a negative power");
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), n);
    if (invert) {
        Rational inv;
        mpq_inv(inv.get_mpq_t(), r.get_mpq_t());
        return inv;
    }
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(const Integer& n, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Integer rising_factorial(long a, unsigned long m) {
    Integer r(1);
    for (unsigned long i = 0; i < m; ++i) r *= Integer(a + static_cast<long>(i));
    return r;
}

std::optional<Rational> parse_rational(const std::string& text) {
    static const std::regex re(R"(^[+-]?\d+(/\d+)?$)");
    if (!std::regex_match(text, re)) return std::nullopt;
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
}

std::string fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string pretty_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return fraction_string(q);
}

} // namespace zetadet
