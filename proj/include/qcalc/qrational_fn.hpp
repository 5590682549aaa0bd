/**
 * @file qrational_fn.hpp
 * @brief Reduced rational functions in q.
 *
 * Normal form: gcd(num, den) = 1 and den has positive leading coefficient,
 * so equality is a structural comparison of the two polynomials.
 */
#ifndef QCALC_QRATIONAL_FN_HPP
#define QCALC_QRATIONAL_FN_HPP

#include "qcalc/qpolynomial.hpp"
#include "qcalc/qseries.hpp"

namespace qcalc {

class QRationalFn {
public:
    QRationalFn() : num_(), den_(QPolynomial::one()) {}
    QRationalFn(QPolynomial num, QPolynomial den);
    explicit QRationalFn(const Rational& c)
        : num_(QPolynomial::constant(c)), den_(QPolynomial::one()) {}
    static QRationalFn from_polynomial(QPolynomial p) {
        return QRationalFn(std::move(p), QPolynomial::one());
    }

    const QPolynomial& num() const { return num_; }
    const QPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend QRationalFn operator+(const QRationalFn& a, const QRationalFn& b);
    friend QRationalFn operator-(const QRationalFn& a, const QRationalFn& b);
    friend QRationalFn operator*(const QRationalFn& a, const QRationalFn& b);
    friend QRationalFn operator/(const QRationalFn& a, const QRationalFn& b);
    friend QRationalFn operator-(const QRationalFn& a);
    QRationalFn& operator+=(const QRationalFn& b) { *this = *this + b; return *this; }
    QRationalFn& operator*=(const QRationalFn& b) { *this = *this * b; return *this; }

    friend bool operator==(const QRationalFn& a, const QRationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRationalFn& a, const QRationalFn& b) { return !(a == b); }

    // den(q) must be nonzero at the evaluation point.
    double eval_double(double q) const;
    Rational eval_rational(const Rational& q) const;

    // Exact value at q = 1. Throws PoleError when den(1) = 0 after reduction:
    // the caller must cancel the remaining (1-q) factors first.
    Rational limit_at_one() const;

    // Truncated power-series expansion; requires den(0) != 0.
    QSeries to_series(unsigned order) const;

    std::string to_text() const;

private:
    void reduce();
    QPolynomial num_;
    QPolynomial den_;
};

} // namespace qcalc

#endif // QCALC_QRATIONAL_FN_HPP
