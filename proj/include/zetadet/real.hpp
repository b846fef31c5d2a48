#pragma once

#include <mpfr.h>

#include "zetadet/rational.hpp"

#include <string>

namespace zetadet {

// Working precision is per-thread; newly created Real values and operation
// results carry at least this many bits. The process default is set once
// (ZETADET_PRECISION or 30 decimal digits) and picked up by every thread.
int working_precision_bits();
void set_working_precision_bits(int bits);
void set_default_precision_digits(int decimal_digits);
int default_precision_digits();

// Absolute-error target matching the configured digit count, 10^(-digits).
double default_target_abs_err();

// Temporarily raises the calling thread's working precision (never lowers it).
class PrecisionGuard {
public:
    explicit PrecisionGuard(int bits);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    int saved_;
};

// Value-semantic MPFR wrapper. Results are rounded to nearest at
// max(working precision, operand precision), so raising the precision in a
// kernel never silently degrades through mixed-precision arithmetic.
class Real {
public:
    Real();
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    explicit Real(double d);
    explicit Real(long n);
    explicit Real(int n) : Real(static_cast<long>(n)) {}
    explicit Real(const Rational& q);
    explicit Real(const Integer& n);

    // Decimal string, parsed at the current working precision.
    static Real from_string(const std::string& text);
    static Real pi();
    static Real nan();

    mpfr_srcptr raw() const { return x_; }
    mpfr_ptr raw() { return x_; }
    int precision_bits() const { return static_cast<int>(mpfr_get_prec(x_)); }

    bool is_finite() const { return mpfr_number_p(x_) != 0; }
    bool is_integer() const { return mpfr_integer_p(x_) != 0; }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    // Shortest-ish rendering with the given number of significant digits.
    std::string str(int digits) const;

    Real operator-() const;
    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);

    friend Real operator+(const Real& a, long b);
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator-(const Real& a, long b);
    friend Real operator-(long a, const Real& b);
    friend Real operator*(const Real& a, long b);
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator/(const Real& a, long b);
    friend Real operator/(long a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }

    friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) == 0; }
    friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) < 0; }
    friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) > 0; }
    friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) <= 0; }
    friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.x_, b) >= 0; }

    friend Real exp(const Real& a);
    friend Real log(const Real& a);
    friend Real sqrt(const Real& a);
    friend Real fabs(const Real& a);
    friend Real pow(const Real& base, const Real& e);
    friend Real pow(const Real& base, long e);

private:
    struct raw_tag {};
    explicit Real(raw_tag, int prec_bits);
    mpfr_t x_;
};

// Numeric result carrying an a-posteriori absolute error estimate.
struct NumValue {
    Real value;
    double err = 0.0;
};

} // namespace zetadet
