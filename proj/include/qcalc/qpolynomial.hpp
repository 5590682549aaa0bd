/**
 * @file qpolynomial.hpp
 * @brief Dense polynomials in the deformation parameter q over Rational.
 *
 * Coefficients are stored ascending by power of q and kept trimmed: the
 * highest-index coefficient is nonzero unless the polynomial is zero (empty).
 */
#ifndef QCALC_QPOLYNOMIAL_HPP
#define QCALC_QPOLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "qcalc/rational.hpp"

namespace qcalc {

class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    QPolynomial(std::initializer_list<long> coeffs) {
        coeffs_.assign(coeffs.begin(), coeffs.end());
        trim();
    }

    static QPolynomial constant(const Rational& c) { return QPolynomial(std::vector<Rational>{c}); }
    static QPolynomial one() { return constant(Rational(1)); }
    // c * q^e
    static QPolynomial monomial(const Rational& c, std::size_t e);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    void add_to_coeff(std::size_t i, const Rational& c);

    QPolynomial& operator+=(const QPolynomial& b);
    QPolynomial& operator-=(const QPolynomial& b);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { a += b; return a; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { a -= b; return a; }
    friend QPolynomial operator-(const QPolynomial& a);
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    friend QPolynomial operator*(const Rational& s, const QPolynomial& a);
    QPolynomial& operator*=(const QPolynomial& b) { *this = *this * b; return *this; }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

    QPolynomial pow(unsigned e) const;

    // Quotient and remainder over the rationals, den != 0.
    static void divmod(const QPolynomial& num, const QPolynomial& den,
                       QPolynomial& quot, QPolynomial& rem);
    // Division known to be exact; a nonzero remainder throws ExactnessError.
    static QPolynomial divide_exact(const QPolynomial& num, const QPolynomial& den);

    // Monic-free gcd via a primitive pseudo-remainder sequence over the
    // integers; result is primitive with positive leading coefficient.
    // gcd(0, 0) = 0.
    static QPolynomial gcd(const QPolynomial& a, const QPolynomial& b);

    double eval_double(double q) const;            // Horner
    Rational eval_rational(const Rational& q) const;

    // Canonical text form, e.g. "1 + 2*q + q^3", "3/4*q^2 - q^5", "0".
    std::string to_text() const;
    // Exact coefficient strings "c0","c1",... ("3/4" style), ascending.
    std::vector<std::string> coeff_strings() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace qcalc

#endif // QCALC_QPOLYNOMIAL_HPP
