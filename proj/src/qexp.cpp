#include "qcalc/qexp.hpp"

#include <cmath>
#include <string>

namespace qcalc {

namespace {

double qexp_series(const QContext& ctx, ExpKind kind, double z) {
    const double q2 = ctx.q2();
    const double omq2 = 1.0 - q2;
    if (kind == ExpKind::SmallE && std::abs(z) * omq2 >= 1.0)
        throw DomainError("qexp: e-series diverges for |z|(1-q^2) >= 1; use ExpForm::Product");
    double sum = 1.0;
    double term = 1.0;
    double qpow = 1.0; // q^{2(n-1)} fed into BigE's q^{n(n-1)}
    bool prev_small = false;
    for (long n = 1; n <= ctx.max_terms; ++n) {
        term *= z / ((1.0 - std::pow(q2, static_cast<double>(n))) / omq2); // / [n]_{q^2}
        if (kind == ExpKind::BigE) {
            if (n > 1) qpow *= q2;
            term *= qpow;
        }
        sum += term;
        const bool small = std::abs(term) < ctx.tol * std::abs(sum);
        if (small && prev_small) return sum;
        prev_small = small;
    }
    throw ConvergenceError("qexp: series did not converge within max_terms = " +
                           std::to_string(ctx.max_terms));
}

double qexp_product(const QContext& ctx, ExpKind kind, double z) {
    const double omq2 = 1.0 - ctx.q2();
    double u = omq2 * z; // q^{2j}(1-q^2)z at j = 0
    double prod = 1.0;
    for (long j = 0; j <= ctx.max_terms; ++j) {
        if (std::abs(u) < ctx.tol) {
            return kind == ExpKind::BigE ? prod : 1.0 / prod;
        }
        const double factor = (kind == ExpKind::BigE) ? 1.0 + u : 1.0 - u;
        if (kind == ExpKind::SmallE && factor == 0.0)
            throw PoleError("qexp: product form of e_{q,2} has a vanishing factor");
        prod *= factor;
        u *= ctx.q2();
    }
    throw ConvergenceError("qexp: product did not converge within max_terms = " +
                           std::to_string(ctx.max_terms));
}

} // namespace

double qexp(const QContext& ctx, ExpKind kind, double z, ExpForm form) {
    if (z == 0.0) return 1.0;
    return form == ExpForm::Series ? qexp_series(ctx, kind, z) : qexp_product(ctx, kind, z);
}

double qderivative(const QContext& ctx, const std::function<double(double)>& f, double x) {
    if (x == 0.0) throw DomainError("qderivative: x must be nonzero");
    return (f(ctx.q * x) - f(x)) / ((ctx.q - 1.0) * x);
}

} // namespace qcalc
