/**
 * @file qnumbers.hpp
 * @brief q-integers, q-factorials, the q,k-Pochhammer symbol and the
 *        q-multinomial coefficient as exact polynomials in q.
 *
 * The step-s variants express base-q^s quantities as polynomials in q itself:
 * qint_step(t, 2) is [t]_{q^2} written out in q, so mixed-base products stay
 * in one polynomial ring.
 */
#ifndef QCALC_QNUMBERS_HPP
#define QCALC_QNUMBERS_HPP

#include <vector>

#include "qcalc/qpolynomial.hpp"

namespace qcalc {

// [t]_q = 1 + q + ... + q^(t-1); qint(0) = 0.
QPolynomial qint(unsigned t);

// [t]_{q^s} as a polynomial in q: 1 + q^s + ... + q^(s(t-1)).
QPolynomial qint_step(unsigned t, unsigned step);

// [n]_q! = [n]_q [n-1]_q ... [1]_q; empty product for n = 0.
QPolynomial qfactorial(unsigned n);

// [n]_{q^s}! in q.
QPolynomial qfactorial_step(unsigned n, unsigned step);

// [t]_{n,k} = prod_{j=0}^{n-1} [t + j*k]_q.
QPolynomial pochhammer_qk(unsigned t, unsigned n, unsigned k);

// Gaussian binomial [n choose k]_{q^s}; exact division of factorials.
QPolynomial qbinomial_step(unsigned n, unsigned k, unsigned step);

// [sum parts]_q! / prod [part]_q!; division is exact by the inversion
// identity, a remainder signals an internal bug.
QPolynomial qmultinomial(const std::vector<unsigned>& parts);

// Float path for real t: [t]_q = (1 - q^t)/(1 - q).
double qint_real(double t, double q);

} // namespace qcalc

#endif // QCALC_QNUMBERS_HPP
