#include "zetadet/real.hpp"

#include "zetadet/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <vector>

namespace zetadet {

namespace {

std::atomic<int> g_default_digits{30};

int digits_to_bits(int digits) {
    return static_cast<int>(std::ceil(digits * 3.321928094887362)) + 32;
}

int& thread_precision() {
    thread_local int bits = digits_to_bits(g_default_digits.load());
    return bits;
}

} // namespace

int working_precision_bits() { return thread_precision(); }

void set_working_precision_bits(int bits) { thread_precision() = std::max(bits, MPFR_PREC_MIN + 8); }

void set_default_precision_digits(int decimal_digits) {
    if (decimal_digits < 6 || decimal_digits > 10000)
        throw domain_error("precision digits out of range [6, 10000]");
    g_default_digits.store(decimal_digits);
    thread_precision() = digits_to_bits(decimal_digits);
}

int default_precision_digits() { return g_default_digits.load(); }

double default_target_abs_err() {
    return std::pow(10.0, -static_cast<double>(g_default_digits.load()));
}

PrecisionGuard::PrecisionGuard(int bits) : saved_(thread_precision()) {
    if (bits > saved_) thread_precision() = bits;
}

PrecisionGuard::~PrecisionGuard() { thread_precision() = saved_; }

Real::Real(raw_tag, int prec_bits) { mpfr_init2(x_, prec_bits); }

Real::Real() {
    mpfr_init2(x_, thread_precision());
    mpfr_set_zero(x_, 1);
}

Real::Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(x_, MPFR_PREC_MIN);
    mpfr_swap(x_, o.x_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real::Real(double d) {
    mpfr_init2(x_, thread_precision());
    mpfr_set_d(x_, d, MPFR_RNDN);
}

Real::Real(long n) {
    mpfr_init2(x_, thread_precision());
    mpfr_set_si(x_, n, MPFR_RNDN);
}

Real::Real(const Rational& q) {
    mpfr_init2(x_, thread_precision());
    mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Integer& n) {
    mpfr_init2(x_, thread_precision());
    mpfr_set_z(x_, n.get_mpz_t(), MPFR_RNDN);
}

Real Real::from_string(const std::string& text) {
    Real r;
    if (mpfr_set_str(r.x_, text.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("not a decimal number: '" + text + "'");
    return r;
}

Real Real::pi() {
    Real r;
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

Real Real::nan() {
    Real r;
    mpfr_set_nan(r.x_);
    return r;
}

std::string Real::str(int digits) const {
    if (digits < 1) digits = 1;
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, x_);
    return std::string(buf.data());
}

namespace {
int result_prec(const Real& a, const Real& b) {
    return std::max(thread_precision(), std::max(a.precision_bits(), b.precision_bits()));
}
int result_prec(const Real& a) { return std::max(thread_precision(), a.precision_bits()); }
} // namespace

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.x_, r.x_, MPFR_RNDN);
    return r;
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

#define ZETADET_BINOP(name, fn)                            \
    Real operator name(const Real& a, const Real& b) {    \
        Real r(Real::raw_tag{}, result_prec(a, b));       \
        fn(r.x_, a.x_, b.x_, MPFR_RNDN);                  \
        return r;                                         \
    }

ZETADET_BINOP(+, mpfr_add)
ZETADET_BINOP(-, mpfr_sub)
ZETADET_BINOP(*, mpfr_mul)
ZETADET_BINOP(/, mpfr_div)
#undef ZETADET_BINOP

Real operator+(const Real& a, long b) {
    Real r(Real::raw_tag{}, result_prec(a));
    mpfr_add_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, long b) {
    Real r(Real::raw_tag{}, result_prec(a));
    mpfr_sub_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

Real operator-(long a, const Real& b) {
    Real r(Real::raw_tag{}, result_prec(b));
    mpfr_si_sub(r.x_, a, b.x_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, long b) {
    Real r(Real::raw_tag{}, result_prec(a));
    mpfr_mul_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, long b) {
    Real r(Real::raw_tag{}, result_prec(a));
    mpfr_div_si(r.x_, a.x_, b, MPFR_RNDN);
    return r;
}

Real operator/(long a, const Real& b) {
    Real r(Real::raw_tag{}, result_prec(b));
    mpfr_si_div(r.x_, a, b.x_, MPFR_RNDN);
    return r;
}

#define ZETADET_UNFUN(name, fn)              \
    Real name(const Real& a) {               \
        Real r(Real::raw_tag{}, result_prec(a)); \
        fn(r.x_, a.x_, MPFR_RNDN);           \
        return r;                            \
    }

ZETADET_UNFUN(exp, mpfr_exp)
ZETADET_UNFUN(log, mpfr_log)
ZETADET_UNFUN(sqrt, mpfr_sqrt)
ZETADET_UNFUN(fabs, mpfr_abs)
#undef ZETADET_UNFUN

Real pow(const Real& base, const Real& e) {
    Real r(Real::raw_tag{}, result_prec(base, e));
    mpfr_pow(r.x_, base.x_, e.x_, MPFR_RNDN);
    return r;
}

Real pow(const Real& base, long e) {
    Real r(Real::raw_tag{}, result_prec(base));
    mpfr_pow_si(r.x_, base.x_, e, MPFR_RNDN);
    return r;
}

} // namespace zetadet
