#include "qcalc/jackson.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qcalc/qexp.hpp"

namespace qcalc {

namespace {

// Geometric tail estimation over a window of |term| ratios. Convergence is
// declared once eight consecutive ratios sit below 1 and the implied
// geometric tail |term| * rho/(1-rho) passes the tolerance; rho is floored
// at the node weight ratio q, which is the asymptotic term ratio whenever
// the integrand stabilizes. Eight consecutive exact zeros also terminate
// (compactly supported or node-cancelled integrands).
class TailTracker {
public:
    explicit TailTracker(double rho_floor) : rho_floor_(rho_floor) {}

    // Returns true when converged; then tail() is the bound.
    bool feed(double abs_term, double tol, double abs_sum) {
        if (abs_term == 0.0) {
            if (++zero_streak_ >= window_size) {
                tail_ = 0.0;
                return true;
            }
            prev_abs_ = 0.0;
            filled_ = 0;
            return false;
        }
        zero_streak_ = 0;
        if (prev_abs_ > 0.0) {
            ratios_[next_] = abs_term / prev_abs_;
            next_ = (next_ + 1) % window_size;
            if (filled_ < window_size) ++filled_;
        }
        prev_abs_ = abs_term;
        if (filled_ == window_size) {
            double rho = rho_floor_;
            bool contracting = true;
            for (double r : ratios_) {
                if (r >= 1.0) contracting = false;
                if (r > rho) rho = r;
            }
            if (contracting && rho < 1.0) {
                const double tail = abs_term * rho / (1.0 - rho);
                if (tail <= tol * abs_sum && tail <= tol) {
                    tail_ = tail;
                    return true;
                }
            }
        }
        return false;
    }

    double tail() const { return tail_; }

private:
    static constexpr int window_size = 8;
    double rho_floor_;
    std::array<double, window_size> ratios_{};
    int next_ = 0;
    int filled_ = 0;
    int zero_streak_ = 0;
    double prev_abs_ = -1.0;
    double tail_ = 0.0;
};

[[noreturn]] void non_finite(const char* where, double x) {
    throw DomainError(std::string(where) + ": non-finite integrand value at node x = " +
                      std::to_string(x));
}

// Core loop shared by definite and symmetric sums: term_n = scale q^n g(q^n b).
QuadratureResult geometric_sum(const QContext& ctx, const Integrand& g, double b,
                               double scale, const char* where) {
    double sum = 0.0;
    double x = b;
    double w = 1.0;
    TailTracker tracker(ctx.q);
    for (long n = 0; n < ctx.max_terms; ++n) {
        const double gx = g(x);
        if (!std::isfinite(gx)) non_finite(where, x);
        const double term = scale * w * gx;
        sum += term;
        if (tracker.feed(std::abs(term), ctx.tol, std::abs(sum)))
            return {sum, n + 1, tracker.tail()};
        w *= ctx.q;
        x *= ctx.q;
    }
    throw ConvergenceError(std::string(where) + ": tail below tol not reached within max_terms = " +
                           std::to_string(ctx.max_terms));
}

// One direction of the improper bilateral sum; term = (1-q) x g(x) along a
// geometric node ray.
double improper_ray(const QContext& ctx, const Integrand& g, double x0, double step,
                    const char* tail_name, long& used, double& tail_out) {
    const double scale = 1.0 - ctx.q;
    double sum = 0.0;
    double x = x0;
    TailTracker tracker(ctx.q);
    for (long n = 0; n < ctx.max_terms; ++n) {
        const double gx = g(x);
        if (!std::isfinite(gx)) non_finite("jackson_improper", x);
        const double term = scale * x * gx;
        sum += term;
        ++used;
        if (tracker.feed(std::abs(term), ctx.tol, std::abs(sum))) {
            tail_out = tracker.tail();
            return sum;
        }
        x *= step;
    }
    throw ConvergenceError(std::string("jackson_improper: ") + tail_name +
                           " tail did not converge within max_terms = " +
                           std::to_string(ctx.max_terms));
}

QuadratureResult improper_bilateral(const QContext& ctx, const Integrand& g, double a) {
    if (!(a > 0.0)) throw DomainError("jackson_improper: scale a must be positive");
    QuadratureResult res;
    double tail_low = 0.0;
    double tail_high = 0.0;
    // n >= 0: nodes shrink toward 0.
    res.value += improper_ray(ctx, g, 1.0 / a, ctx.q, "lower (x->0)", res.terms_used, tail_low);
    // n <= -1: nodes grow toward infinity.
    res.value += improper_ray(ctx, g, (1.0 / a) / ctx.q, 1.0 / ctx.q, "upper (x->inf)",
                              res.terms_used, tail_high);
    res.tail_bound = tail_low + tail_high;
    return res;
}

} // namespace

double gauss_nu(const QContext& ctx) {
    return std::sqrt(ctx.two_q() / (1.0 - ctx.q2()));
}

double gauss_improper_scale(const QContext& ctx, double a) {
    return a * std::sqrt(1.0 - ctx.q2());
}

QuadratureResult jackson_definite(const QContext& ctx, const Integrand& f, double b) {
    if (!(b > 0.0)) throw DomainError("jackson_definite: b must be positive");
    return geometric_sum(ctx, f, b, (1.0 - ctx.q) * b, "jackson_definite");
}

QuadratureResult jackson_symmetric(const QContext& ctx, const Integrand& f, double b) {
    if (!(b > 0.0)) throw DomainError("jackson_symmetric: b must be positive");
    return geometric_sum(
        ctx, [&f](double x) { return f(x) + f(-x); }, b, (1.0 - ctx.q) * b,
        "jackson_symmetric");
}

QuadratureResult jackson_improper(const QContext& ctx, const Integrand& f, double a) {
    return improper_bilateral(ctx, f, a);
}

QuadratureResult integrate(const QContext& ctx, const Integrand& f, const IntegrationDomain& dom) {
    switch (dom.kind) {
        case IntegrationDomain::Kind::Definite: return jackson_definite(ctx, f, dom.bound);
        case IntegrationDomain::Kind::Improper: return jackson_improper(ctx, f, dom.bound);
        case IntegrationDomain::Kind::Symmetric: return jackson_symmetric(ctx, f, dom.bound);
    }
    throw DomainError("integrate: unknown domain kind");
}

namespace detail {

double BigEGaussianKernel::operator()(double x) {
    const double ax = std::fabs(x);
    if (primed_ && ax == last_x_) return last_val_;
    const double omq2 = 1.0 - ctx_.q2();
    if (primed_ && ax == last_x_ * ctx_.q) {
        // E(q^2 z) = E(z) / (1 + (1-q^2) z) with z = -q^2 x^2/[2]_q.
        const double z = -ctx_.q2() * last_x_ * last_x_ / ctx_.two_q();
        last_val_ /= 1.0 + omq2 * z;
        last_x_ = ax;
        return last_val_;
    }
    last_val_ = qexp(ctx_, ExpKind::BigE, -ctx_.q2() * ax * ax / ctx_.two_q(), ExpForm::Product);
    last_x_ = ax;
    primed_ = true;
    return last_val_;
}

double SmallEGaussianKernel::operator()(double x) {
    const double ax = std::fabs(x);
    if (primed_ && ax == last_x_) return last_val_;
    const double omq2 = 1.0 - ctx_.q2();
    if (primed_) {
        const double z = -last_x_ * last_x_ / ctx_.two_q();
        if (ax == last_x_ * ctx_.q) {
            // e(q^2 z) = e(z) (1 - (1-q^2) z)
            last_val_ *= 1.0 - omq2 * z;
            last_x_ = ax;
            return last_val_;
        }
        if (ax == last_x_ / ctx_.q) {
            // e(z/q^2) = e(z) / (1 - (1-q^2) z / q^2)
            last_val_ /= 1.0 - omq2 * z / ctx_.q2();
            last_x_ = ax;
            return last_val_;
        }
    }
    last_val_ = qexp(ctx_, ExpKind::SmallE, -ax * ax / ctx_.two_q(), ExpForm::Product);
    last_x_ = ax;
    primed_ = true;
    return last_val_;
}

} // namespace detail

double gauss_G(const QContext& ctx, double t) {
    if (!(t > 0.0)) throw DomainError("gauss_G: t must be positive");
    detail::BigEGaussianKernel kernel(ctx);
    const double nu = gauss_nu(ctx);
    const auto f = [&kernel, t](double x) { return std::pow(x, t - 1.0) * kernel(x); };
    return 0.5 * jackson_symmetric(ctx, f, nu).value;
}

double gauss_Ga(const QContext& ctx, double a, double t) {
    if (!(a > 0.0)) throw DomainError("gauss_Ga: a must be positive");
    if (!(t > 0.0)) throw DomainError("gauss_Ga: t must be positive");
    detail::SmallEGaussianKernel kernel(ctx);
    const auto g = [&kernel, t](double x) {
        return std::pow(x, t - 1.0) * kernel(x) + std::pow(-x, t - 1.0) * kernel(x);
    };
    return 0.5 * improper_bilateral(ctx, g, gauss_improper_scale(ctx, a)).value;
}

double normalized_moment(const QContext& ctx, unsigned n) {
    detail::BigEGaussianKernel kernel(ctx);
    const double nu = gauss_nu(ctx);
    const double p = 2.0 * n;
    const auto numerator = [&kernel, p](double x) { return std::pow(x, p) * kernel(x); };
    const auto plain = [&kernel](double x) { return kernel(x); };
    const double num = jackson_symmetric(ctx, numerator, nu).value;
    const double den = jackson_symmetric(ctx, plain, nu).value;
    return num / den;
}

} // namespace qcalc
