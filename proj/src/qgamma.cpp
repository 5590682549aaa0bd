#include "qcalc/qgamma.hpp"

#include <cmath>
#include <string>

namespace qcalc {

double qpoch2_infinite(const QContext& ctx, double x) {
    const double omq2 = 1.0 - ctx.q2();
    double u = x;
    double prod = 1.0;
    for (long j = 0; j <= ctx.max_terms; ++j) {
        // Remaining factors differ from 1 by sum_{i>=j} |q^{2i}x| ~ |u|/(1-q^2).
        if (std::abs(u) < ctx.tol * omq2) return prod;
        prod *= 1.0 + u;
        u *= ctx.q2();
    }
    throw ConvergenceError("qpoch2_infinite: no convergence within max_terms = " +
                           std::to_string(ctx.max_terms));
}

double qpoch2_power(const QContext& ctx, double x, double t) {
    return qpoch2_infinite(ctx, x) / qpoch2_infinite(ctx, std::pow(ctx.q, 2.0 * t) * x);
}

double gamma_q2_closed(const QContext& ctx, double t) {
    if (!(t > 0.0)) throw DomainError("gamma_q2_closed: t must be positive");
    const double s = t / 2.0 - 1.0;
    return qpoch2_power(ctx, -ctx.q2(), s) / std::pow(1.0 - ctx.q, s);
}

double c_factor(const QContext& ctx, double a, double t) {
    if (!(a > 0.0)) throw DomainError("c_factor: a must be positive");
    const double two_q = ctx.two_q();
    const double w = two_q * a * a;
    return std::pow(a, t) * std::pow(two_q, t / 2.0) / (1.0 + w)
        * qpoch2_power(ctx, 1.0 / w, t / 2.0)
        * qpoch2_power(ctx, w, 1.0 - t / 2.0);
}

} // namespace qcalc
