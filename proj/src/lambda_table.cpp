#include "qcalc/lambda_table.hpp"

#include "qcalc/qnumbers.hpp"

namespace qcalc {

namespace {
// m(m-1) with the m = 0 corner flattened to 0.
unsigned falling_sq(unsigned m) { return m == 0 ? 0 : m * (m - 1); }
} // namespace

QPolynomial decomp_numerator(DecompKind kind, unsigned c, unsigned d) {
    QPolynomial acc;
    for (unsigned k = 0; k <= c; ++k) {
        const unsigned expo =
            kind == DecompKind::Lambda ? falling_sq(d + k) : falling_sq(c - k);
        const Rational sign((c - k) % 2 == 0 ? 1 : -1);
        // [c+d]_{q^2}! / ([d+k]_{q^2}! [c-k]_{q^2}!) is the Gaussian binomial
        // [c+d choose d+k]_{q^2}, a polynomial.
        acc += QPolynomial::monomial(sign * Rational(binomial(d + k, k)), expo) *
               qbinomial_step(c + d, d + k, 2);
    }
    return acc;
}

QRationalFn decomp_coeff(DecompKind kind, unsigned c, unsigned d) {
    return QRationalFn(decomp_numerator(kind, c, d), qfactorial_step(c + d, 2));
}

QRationalFn LambdaTable::coeff(unsigned c, unsigned d) const {
    const auto key = std::make_pair(c, d);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    QRationalFn value = decomp_coeff(kind_, c, d);
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.emplace(key, std::move(value)).first->second;
}

std::size_t LambdaTable::cached_entries() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
}

AdditionReport verify_addition_decomposition(DecompKind kind, unsigned N) {
    AdditionReport rep;
    rep.kind = kind;
    rep.order = N;
    for (unsigned n = 0; n <= N; ++n) {
        for (unsigned a = 0; a <= n; ++a) {
            const unsigned b = n - a;
            // Both sides scaled by the common denominator [n]_{q^2}!.
            QPolynomial lhs = QPolynomial::monomial(
                Rational(binomial(n, a)),
                kind == DecompKind::Lambda ? falling_sq(n) : 0);
            QPolynomial rhs;
            for (unsigned m = 0; m <= a; ++m) {
                QPolynomial t = decomp_numerator(kind, a - m, b) * qbinomial_step(n, m, 2);
                if (kind == DecompKind::Lambda)
                    t = QPolynomial::monomial(Rational(1), falling_sq(m)) * t;
                rhs += t;
            }
            ++rep.checked;
            if (lhs != rhs)
                rep.failures.push_back({a, b, lhs.to_text(), rhs.to_text()});
        }
    }
    return rep;
}

} // namespace qcalc
