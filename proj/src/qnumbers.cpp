#include "qcalc/qnumbers.hpp"

#include <cmath>

namespace qcalc {

QPolynomial qint(unsigned t) { return qint_step(t, 1); }

QPolynomial qint_step(unsigned t, unsigned step) {
    if (t == 0) return {};
    std::vector<Rational> v(static_cast<std::size_t>(step) * (t - 1) + 1, Rational(0));
    for (unsigned j = 0; j < t; ++j) v[static_cast<std::size_t>(j) * step] = Rational(1);
    return QPolynomial(std::move(v));
}

QPolynomial qfactorial(unsigned n) { return qfactorial_step(n, 1); }

QPolynomial qfactorial_step(unsigned n, unsigned step) {
    QPolynomial acc = QPolynomial::one();
    for (unsigned m = 1; m <= n; ++m) acc *= qint_step(m, step);
    return acc;
}

QPolynomial pochhammer_qk(unsigned t, unsigned n, unsigned k) {
    QPolynomial acc = QPolynomial::one();
    for (unsigned j = 0; j < n; ++j) acc *= qint(t + j * k);
    return acc;
}

QPolynomial qbinomial_step(unsigned n, unsigned k, unsigned step) {
    if (k > n) return {};
    return QPolynomial::divide_exact(qfactorial_step(n, step),
                                     qfactorial_step(k, step) * qfactorial_step(n - k, step));
}

QPolynomial qmultinomial(const std::vector<unsigned>& parts) {
    if (parts.empty()) throw DomainError("qmultinomial: parts must be non-empty");
    unsigned total = 0;
    QPolynomial den = QPolynomial::one();
    for (unsigned p : parts) {
        if (p == 0) throw DomainError("qmultinomial: parts must be positive");
        total += p;
        den *= qfactorial(p);
    }
    return QPolynomial::divide_exact(qfactorial(total), den);
}

double qint_real(double t, double q) {
    return (1.0 - std::pow(q, t)) / (1.0 - q);
}

} // namespace qcalc
