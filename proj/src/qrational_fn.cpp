#include "qcalc/qrational_fn.hpp"

namespace qcalc {

QRationalFn::QRationalFn(QPolynomial num, QPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("QRationalFn: zero denominator");
    reduce();
}

void QRationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = QPolynomial::one();
        return;
    }
    QPolynomial g = QPolynomial::gcd(num_, den_);
    if (g.degree() > 0 || !g.leading().is_one()) {
        num_ = QPolynomial::divide_exact(num_, g);
        den_ = QPolynomial::divide_exact(den_, g);
    }
    // Scale so den is monic-positive: positive leading coefficient and, to
    // make the form unique, leading coefficient 1.
    const Rational lc = den_.leading();
    if (!lc.is_one()) {
        const Rational inv = Rational(1) / lc;
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

QRationalFn operator+(const QRationalFn& a, const QRationalFn& b) {
    return QRationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRationalFn operator-(const QRationalFn& a, const QRationalFn& b) {
    return QRationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QRationalFn operator*(const QRationalFn& a, const QRationalFn& b) {
    return QRationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

QRationalFn operator/(const QRationalFn& a, const QRationalFn& b) {
    if (b.is_zero()) throw DomainError("QRationalFn: division by zero");
    return QRationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

QRationalFn operator-(const QRationalFn& a) {
    QRationalFn r = a;
    r.num_ = -r.num_;
    return r;
}

double QRationalFn::eval_double(double q) const {
    const double d = den_.eval_double(q);
    if (d == 0.0) throw PoleError("QRationalFn: pole at q = " + std::to_string(q));
    return num_.eval_double(q) / d;
}

Rational QRationalFn::eval_rational(const Rational& q) const {
    const Rational d = den_.eval_rational(q);
    if (d.is_zero()) throw PoleError("QRationalFn: pole at the evaluation point");
    return num_.eval_rational(q) / d;
}

Rational QRationalFn::limit_at_one() const {
    const Rational d = den_.eval_rational(Rational(1));
    if (d.is_zero())
        throw PoleError("QRationalFn: indeterminate at q = 1; caller must cancel (1-q) factors first");
    return num_.eval_rational(Rational(1)) / d;
}

QSeries QRationalFn::to_series(unsigned order) const {
    return QSeries::from_polynomial(num_, order).divide_by_polynomial(den_);
}

std::string QRationalFn::to_text() const {
    if (den_.is_one()) return num_.to_text();
    return "(" + num_.to_text() + ") / (" + den_.to_text() + ")";
}

} // namespace qcalc
