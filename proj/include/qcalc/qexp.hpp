/**
 * @file qexp.hpp
 * @brief The two q-exponentials in series and product form, and the
 *        q-derivative operator.
 */
#ifndef QCALC_QEXP_HPP
#define QCALC_QEXP_HPP

#include <functional>

#include "qcalc/qcontext.hpp"

namespace qcalc {

// E_{q,2}^z = sum q^{n(n-1)} z^n / [n]_{q^2}! = prod (1 + q^{2j}(1-q^2)z)
// e_{q,2}^z = sum z^n / [n]_{q^2}!        = 1 / prod (1 - q^{2j}(1-q^2)z)
//
// The e-series converges only for |z|(1-q^2) < 1; outside that radius a
// DomainError directs the caller to the Product form. Series truncates when
// two consecutive terms drop below tol * |partial sum|; products truncate at
// the first factor within tol of 1.
double qexp(const QContext& ctx, ExpKind kind, double z, ExpForm form);

// (f(qx) - f(x)) / ((q-1)x); x must be nonzero.
double qderivative(const QContext& ctx, const std::function<double(double)>& f, double x);

} // namespace qcalc

#endif // QCALC_QEXP_HPP
