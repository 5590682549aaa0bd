/**
 * @file qseries.hpp
 * @brief Truncated power series in q over Rational.
 *
 * A QSeries carries its inclusive truncation order M on every value; coeffs_
 * always has exactly M+1 entries. Mixing two series takes the min order, so
 * precision loss is always explicit in the result's order.
 */
#ifndef QCALC_QSERIES_HPP
#define QCALC_QSERIES_HPP

#include <vector>

#include "qcalc/qpolynomial.hpp"

namespace qcalc {

class QSeries {
public:
    // Zero series of the given order.
    explicit QSeries(unsigned order) : coeffs_(order + 1, Rational(0)) {}
    QSeries(std::vector<Rational> coeffs, unsigned order) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, Rational(0));
    }

    static QSeries from_polynomial(const QPolynomial& p, unsigned order);
    static QSeries one(unsigned order) { return from_polynomial(QPolynomial::one(), order); }

    unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const Rational& coeff(unsigned i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& s, QSeries a);
    QSeries& operator+=(const QSeries& b) { *this = *this + b; return *this; }

    // Multiplicative inverse; requires coeff(0) != 0.
    QSeries inverse() const;
    // this / p truncated at this->order(); requires p(0) != 0.
    QSeries divide_by_polynomial(const QPolynomial& p) const;

    // Series shifted by q^e (coefficients beyond the order fall off).
    QSeries shift(unsigned e) const;

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    double eval_double(double q) const;
    std::vector<std::string> coeff_strings() const;

private:
    std::vector<Rational> coeffs_; // size order+1
};

} // namespace qcalc

#endif // QCALC_QSERIES_HPP
