#ifndef QCALC_QCONTEXT_HPP
#define QCALC_QCONTEXT_HPP

#include "qcalc/errors.hpp"

namespace qcalc {

// Fixed deformation parameter plus the truncation policy for series,
// products and Jackson sums. Immutable after construction.
struct QContext {
    double q;
    double tol;
    long max_terms;

    explicit QContext(double q_, double tol_ = 1e-12, long max_terms_ = 1000000)
        : q(q_), tol(tol_), max_terms(max_terms_) {
        if (!(q > 0.0 && q < 1.0)) throw DomainError("QContext: q must lie in (0,1)");
        if (!(tol > 0.0)) throw DomainError("QContext: tol must be positive");
        if (max_terms <= 0) throw DomainError("QContext: max_terms must be positive");
    }

    double q2() const { return q * q; }
    // [2]_q = 1 + q
    double two_q() const { return 1.0 + q; }
};

// The two q-deformations of exp: BigE has the q^{n(n-1)} series weights and
// the (1+(1-q^2)x) infinite product; SmallE is its formal inverse.
enum class ExpKind { BigE, SmallE };

enum class ExpForm { Series, Product };

} // namespace qcalc

#endif // QCALC_QCONTEXT_HPP
