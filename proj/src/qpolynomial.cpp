#include "qcalc/qpolynomial.hpp"

#include <sstream>

namespace qcalc {

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPolynomial QPolynomial::monomial(const Rational& c, std::size_t e) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(e + 1, Rational(0));
    v[e] = c;
    return QPolynomial(std::move(v));
}

const Rational& QPolynomial::leading() const {
    static const Rational zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

void QPolynomial::add_to_coeff(std::size_t i, const Rational& c) {
    if (i >= coeffs_.size()) coeffs_.resize(i + 1, Rational(0));
    coeffs_[i] += c;
    trim();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& b) {
    if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& b) {
    if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
    trim();
    return *this;
}

QPolynomial operator-(const QPolynomial& a) {
    std::vector<Rational> v;
    v.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) v.push_back(-c);
    return QPolynomial(std::move(v));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPolynomial(std::move(v));
}

QPolynomial operator*(const Rational& s, const QPolynomial& a) {
    if (s.is_zero()) return {};
    std::vector<Rational> v;
    v.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) v.push_back(s * c);
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::pow(unsigned e) const {
    QPolynomial result = one();
    QPolynomial base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

void QPolynomial::divmod(const QPolynomial& num, const QPolynomial& den,
                         QPolynomial& quot, QPolynomial& rem) {
    if (den.is_zero()) throw DomainError("QPolynomial: division by zero polynomial");
    quot = {};
    rem = num;
    const long dden = den.degree();
    const Rational& lc = den.leading();
    while (!rem.is_zero() && rem.degree() >= dden) {
        const long shift = rem.degree() - dden;
        const Rational factor = rem.leading() / lc;
        quot.add_to_coeff(static_cast<std::size_t>(shift), factor);
        // rem -= factor * q^shift * den
        for (long i = 0; i <= dden; ++i)
            rem.add_to_coeff(static_cast<std::size_t>(i + shift), -(factor * den.coeff(static_cast<std::size_t>(i))));
    }
}

QPolynomial QPolynomial::divide_exact(const QPolynomial& num, const QPolynomial& den) {
    QPolynomial q, r;
    divmod(num, den, q, r);
    if (!r.is_zero())
        throw ExactnessError("QPolynomial: division expected exact but remainder is " + r.to_text());
    return q;
}

namespace {

// Integer polynomial helpers for the primitive PRS gcd.
using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zmake_primitive(ZPoly& p) {
    Integer g = zcontent(p);
    if (g == 0 || g == 1) return;
    for (auto& c : p) c /= g;
}

// Clears denominators and content: primitive integer polynomial with the
// same roots.
ZPoly to_primitive_z(const QPolynomial& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(c.num() * (l / c.den()));
    zmake_primitive(z);
    return z;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, over the integers.
ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Integer la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

} // namespace

QPolynomial QPolynomial::gcd(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        const QPolynomial& nz = a.is_zero() ? b : a;
        ZPoly z = to_primitive_z(nz);
        if (z.back() < 0)
            for (auto& c : z) c = -c;
        std::vector<Rational> v;
        v.reserve(z.size());
        for (auto& c : z) v.emplace_back(c);
        return QPolynomial(std::move(v));
    }

    ZPoly u = to_primitive_z(a);
    ZPoly v = to_primitive_z(b);
    if (u.size() < v.size()) u.swap(v);
    while (!v.empty()) {
        ZPoly r = zpseudo_rem(u, v);
        zmake_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    if (u.back() < 0)
        for (auto& c : u) c = -c;
    std::vector<Rational> out;
    out.reserve(u.size());
    for (auto& c : u) out.emplace_back(c);
    return QPolynomial(std::move(out));
}

double QPolynomial::eval_double(double q) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + coeffs_[i].to_double();
    return acc;
}

Rational QPolynomial::eval_rational(const Rational& q) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + coeffs_[i];
    return acc;
}

std::string QPolynomial::to_text() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool neg = c.sgn() < 0;
        const Rational mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.to_string();
        } else {
            if (!mag.is_one()) os << mag.to_string() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::vector<std::string> QPolynomial::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_string());
    return out;
}

} // namespace qcalc
