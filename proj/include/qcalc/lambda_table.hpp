/**
 * @file lambda_table.hpp
 * @brief Exact addition-decomposition coefficients of the q-exponentials.
 *
 * E_{q,2}^{x+y} = E_{q,2}^x * sum_{c,d} lambda_{c,d} x^c y^d
 * e_{q,2}^{x+y} = e_{q,2}^x * sum_{c,d} kappa_{c,d}  x^c y^d
 *
 * lambda_{c,d} = sum_{k=0}^{c} (-1)^{c-k} C(d+k,k) q^{(d+k)(d+k-1)}
 *                / ([d+k]_{q^2}! [c-k]_{q^2}!)
 * kappa swaps the exponent to (c-k)(c-k-1). Both live over the common
 * denominator [c+d]_{q^2}!, which keeps construction gcd-free.
 */
#ifndef QCALC_LAMBDA_TABLE_HPP
#define QCALC_LAMBDA_TABLE_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qcalc/qrational_fn.hpp"

namespace qcalc {

enum class DecompKind { Lambda, Kappa };

// Numerator of the coefficient over the denominator [c+d]_{q^2}!.
QPolynomial decomp_numerator(DecompKind kind, unsigned c, unsigned d);

// Reduced exact coefficient.
QRationalFn decomp_coeff(DecompKind kind, unsigned c, unsigned d);

// Memoizing owner of the decomposition coefficients. Append-only cache, safe
// under concurrent reads with occasional inserts.
class LambdaTable {
public:
    explicit LambdaTable(DecompKind kind) : kind_(kind) {}

    DecompKind kind() const { return kind_; }
    QRationalFn coeff(unsigned c, unsigned d) const;
    std::size_t cached_entries() const;

private:
    DecompKind kind_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<unsigned, unsigned>, QRationalFn> cache_;
};

struct AdditionFailure {
    unsigned xdeg = 0;
    unsigned ydeg = 0;
    std::string lhs;
    std::string rhs;
};

struct AdditionReport {
    DecompKind kind = DecompKind::Lambda;
    unsigned order = 0;
    unsigned checked = 0;
    std::vector<AdditionFailure> failures;

    bool passed() const { return failures.empty(); }
};

// Expands both sides of the decomposition identity as bivariate polynomials
// in x, y up to total degree N and compares every coefficient exactly.
AdditionReport verify_addition_decomposition(DecompKind kind, unsigned N);

} // namespace qcalc

#endif // QCALC_LAMBDA_TABLE_HPP
