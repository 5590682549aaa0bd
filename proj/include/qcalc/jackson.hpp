/**
 * @file jackson.hpp
 * @brief Jackson integrals on geometric node sets, the Gauss-Jackson
 *        integrals G(t), G^(a)(t), and normalized q-Gaussian moments.
 *
 * Definite:  int_0^b f d_qx          = (1-q) b sum_{n>=0} q^n f(q^n b)
 * Improper:  int_0^{inf/a} f d_qx    = (1-q) sum_{n in Z} (q^n/a) f(q^n/a)
 * Symmetric: int_{-b}^{b} f d_qx     = (1-q) b sum_{n>=0} q^n (f(q^n b) + f(-q^n b))
 *
 * Symmetric sums combine the two mirror nodes before scaling, so odd
 * integrands cancel exactly node by node. All sums run in deterministic
 * order (definite ascending n, improper outward from n = 0).
 */
#ifndef QCALC_JACKSON_HPP
#define QCALC_JACKSON_HPP

#include <functional>

#include "qcalc/qcontext.hpp"

namespace qcalc {

using Integrand = std::function<double(double)>;

struct QuadratureResult {
    double value = 0.0;
    long terms_used = 0;
    double tail_bound = 0.0; // <= tol * |value| on success
};

struct IntegrationDomain {
    enum class Kind { Definite, Improper, Symmetric };
    Kind kind;
    double bound; // b for Definite/Symmetric, a for Improper

    static IntegrationDomain definite(double b) { return {Kind::Definite, b}; }
    static IntegrationDomain improper(double a) { return {Kind::Improper, a}; }
    static IntegrationDomain symmetric(double b) { return {Kind::Symmetric, b}; }
};

// nu = ([2]_q / (1-q^2))^{1/2}, the symmetric Gaussian bound.
double gauss_nu(const QContext& ctx);
// a(1-q^2)^{1/2}, the improper Gaussian node scale.
double gauss_improper_scale(const QContext& ctx, double a);

QuadratureResult jackson_definite(const QContext& ctx, const Integrand& f, double b);
QuadratureResult jackson_improper(const QContext& ctx, const Integrand& f, double a);
QuadratureResult jackson_symmetric(const QContext& ctx, const Integrand& f, double b);
QuadratureResult integrate(const QContext& ctx, const Integrand& f, const IntegrationDomain& dom);

// G(t) = 1/2 int_{-nu}^{nu} x^{t-1} E_{q,2}^{-q^2 x^2/[2]_q} d_qx
double gauss_G(const QContext& ctx, double t);
// G^(a)(t), the e_{q,2} analogue over (-eps^(a), eps^(a)).
double gauss_Ga(const QContext& ctx, double a, double t);

// mu_{2n}: the x^{2n} symmetric Gaussian integral over the plain one.
// Equals [1]_{n,2} evaluated at q.
double normalized_moment(const QContext& ctx, unsigned n);

namespace detail {

// E_{q,2}^{-q^2 x^2/[2]_q} with O(1) updates along geometric node sequences:
// stepping x -> qx divides the defining product by its leading factor.
// Stateful; call sequentially only.
class BigEGaussianKernel {
public:
    explicit BigEGaussianKernel(const QContext& ctx) : ctx_(ctx) {}
    double operator()(double x);

private:
    QContext ctx_;
    bool primed_ = false;
    double last_x_ = 0.0;
    double last_val_ = 0.0;
};

// e_{q,2}^{-x^2/[2]_q}, same stepping trick in both directions.
class SmallEGaussianKernel {
public:
    explicit SmallEGaussianKernel(const QContext& ctx) : ctx_(ctx) {}
    double operator()(double x);

private:
    QContext ctx_;
    bool primed_ = false;
    double last_x_ = 0.0;
    double last_val_ = 0.0;
};

} // namespace detail

} // namespace qcalc

#endif // QCALC_JACKSON_HPP
