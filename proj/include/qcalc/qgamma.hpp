/**
 * @file qgamma.hpp
 * @brief The q,2-gamma function in closed form and the bridge factor c(a,t)
 *        relating it to the lower gamma's improper-integral representation.
 */
#ifndef QCALC_QGAMMA_HPP
#define QCALC_QGAMMA_HPP

#include "qcalc/qcontext.hpp"

namespace qcalc {

// (1+x)^infinity_{q,2} = prod_{j>=0} (1 + q^{2j} x), truncated once the
// remaining log-tail is below tol.
double qpoch2_infinite(const QContext& ctx, double x);

// (1+x)^t_{q,2} = (1+x)^inf / (1+q^{2t}x)^inf; real t goes strictly through
// this ratio, never through fractional powers of partial products.
double qpoch2_power(const QContext& ctx, double x, double t);

// Gamma_{q,2}(t) = (1-q^2)^{t/2-1}_{q,2} / (1-q)^{t/2-1}, t > 0.
double gamma_q2_closed(const QContext& ctx, double t);

// c(a,t) = a^t [2]_q^{t/2} / (1 + [2]_q a^2)
//          * (1 + 1/([2]_q a^2))^{t/2}_{q,2} * (1 + [2]_q a^2)^{1-t/2}_{q,2}
// Satisfies Gamma_{q,2}(t) = c(a,t) * gamma^{(a)}_{q,2}(t).
double c_factor(const QContext& ctx, double a, double t);

} // namespace qcalc

#endif // QCALC_QGAMMA_HPP
