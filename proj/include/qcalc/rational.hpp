/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Thin value wrapper around GMP's mpq_class. Kept canonical at all times:
 * gcd(|num|, den) = 1 and den > 0.
 */
#ifndef QCALC_RATIONAL_HPP
#define QCALC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "qcalc/errors.hpp"

namespace qcalc {

using Integer = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                // NOLINT(google-explicit-constructor)
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT
    Rational(const Integer& n) : v_(n) {}     // NOLINT

    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den)
        : Rational(Integer(static_cast<signed long>(num)), Integer(static_cast<signed long>(den))) {}

    // Parses "n" or "n/d" with optional sign, base 10.
    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw DomainError("Rational: unparseable literal '" + s + "'");
        if (v.get_den() == 0) throw DomainError("Rational: zero denominator in '" + s + "'");
        v.canonicalize();
        Rational r;
        r.v_ = std::move(v);
        return r;
    }

    const Integer num() const { return v_.get_num(); }
    const Integer den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sgn() const { return ::sgn(v_); }

    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw DomainError("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

inline Rational pow(const Rational& base, unsigned long e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), e);
    return Rational(num, den);
}

inline Integer factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// (2n-1)!! = (2n-1)(2n-3)...1; n = 0 gives 1.
inline Integer double_factorial_odd(unsigned long n) {
    mpz_class r = 1;
    for (unsigned long m = 1; m <= n; ++m) r *= 2 * m - 1;
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace qcalc

#endif // QCALC_RATIONAL_HPP
