#include "qcalc/qseries.hpp"

#include <algorithm>

namespace qcalc {

QSeries QSeries::from_polynomial(const QPolynomial& p, unsigned order) {
    std::vector<Rational> v(order + 1, Rational(0));
    const std::size_t n = std::min<std::size_t>(v.size(), p.coeffs().size());
    for (std::size_t i = 0; i < n; ++i) v[i] = p.coeffs()[i];
    return QSeries(std::move(v), order);
}

const Rational& QSeries::coeff(unsigned i) const {
    if (i >= coeffs_.size()) throw DomainError("QSeries: coefficient index beyond truncation order");
    return coeffs_[i];
}

bool QSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    const unsigned m = std::min(a.order(), b.order());
    QSeries r(m);
    for (unsigned i = 0; i <= m; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    const unsigned m = std::min(a.order(), b.order());
    QSeries r(m);
    for (unsigned i = 0; i <= m; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const unsigned m = std::min(a.order(), b.order());
    QSeries r(m);
    for (unsigned i = 0; i <= m; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (unsigned j = 0; i + j <= m; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

QSeries operator*(const Rational& s, QSeries a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
}

QSeries QSeries::inverse() const {
    if (coeffs_[0].is_zero()) throw PoleError("QSeries: inverse of a series with zero constant term");
    const unsigned m = order();
    QSeries r(m);
    const Rational c0inv = Rational(1) / coeffs_[0];
    r.coeffs_[0] = c0inv;
    for (unsigned n = 1; n <= m; ++n) {
        Rational acc(0);
        for (unsigned k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
        r.coeffs_[n] = -(c0inv * acc);
    }
    return r;
}

QSeries QSeries::divide_by_polynomial(const QPolynomial& p) const {
    return *this * QSeries::from_polynomial(p, order()).inverse();
}

QSeries QSeries::shift(unsigned e) const {
    QSeries r(order());
    for (unsigned i = 0; i + e <= order(); ++i) r.coeffs_[i + e] = coeffs_[i];
    return r;
}

double QSeries::eval_double(double q) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + coeffs_[i].to_double();
    return acc;
}

std::vector<std::string> QSeries::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

} // namespace qcalc
