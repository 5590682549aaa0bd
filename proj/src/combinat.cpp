#include "qcalc/combinat.hpp"

#include <algorithm>
#include <string>

namespace qcalc {

Pairing::Pairing(std::vector<std::pair<int, int>> raw) : pairs(std::move(raw)) {
    for (auto& p : pairs)
        if (p.first > p.second) std::swap(p.first, p.second);
    std::sort(pairs.begin(), pairs.end());
    const int two_n = 2 * n();
    std::vector<bool> seen(static_cast<std::size_t>(two_n) + 1, false);
    for (const auto& [a, b] : pairs) {
        if (a < 1 || b > two_n || a == b)
            throw DomainError("Pairing: pairs must cover [[2n]] with distinct endpoints");
        if (seen[static_cast<std::size_t>(a)] || seen[static_cast<std::size_t>(b)])
            throw DomainError("Pairing: repeated element " + std::to_string(seen[static_cast<std::size_t>(a)] ? a : b));
        seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
    }
}

long pairing_weight_exponent(const Pairing& alpha) {
    long e = 0;
    std::vector<int> prior_b; // right endpoints of earlier chords
    for (const auto& [a, b] : alpha.pairs) {
        for (int j = a + 1; j < b; ++j)
            if (std::find(prior_b.begin(), prior_b.end(), j) == prior_b.end()) ++e;
        prior_b.push_back(b);
    }
    return e;
}

QPolynomial pairing_weight(const Pairing& alpha) {
    return QPolynomial::monomial(Rational(1), static_cast<std::size_t>(pairing_weight_exponent(alpha)));
}

void check_pairing_guard(int n) {
    if (n < 0) throw DomainError("for_each_pairing: n must be non-negative");
    if (n >= 10) {
        Integer count = double_factorial_odd(static_cast<unsigned long>(n));
        throw SizeGuardError("for_each_pairing: n = " + std::to_string(n) + " would stream (2n-1)!! = " +
                             count.get_str() + " pairings; limit is n <= 9");
    }
}

std::vector<Pairing> enumerate_pairings(int n) {
    std::vector<Pairing> out;
    for_each_pairing(n, [&](const Pairing& p) { out.push_back(p); });
    return out;
}

QPolynomial sum_pairing_weights(int n) {
    QPolynomial acc;
    for_each_pairing(n, [&](const Pairing& p) {
        acc.add_to_coeff(static_cast<std::size_t>(pairing_weight_exponent(p)), Rational(1));
    });
    return acc;
}

FiberMap::FiberMap(std::vector<int> v, std::vector<unsigned> ps)
    : values(std::move(v)), parts(std::move(ps)) {
    std::vector<unsigned> counts(parts.size(), 0);
    for (int x : values) {
        if (x < 1 || static_cast<std::size_t>(x) > parts.size())
            throw DomainError("FiberMap: value outside [[n]]");
        ++counts[static_cast<std::size_t>(x) - 1];
    }
    if (counts != parts) throw DomainError("FiberMap: fiber sizes do not match parts");
}

unsigned inversions(const FiberMap& f) {
    unsigned inv = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        for (std::size_t j = i + 1; j < f.values.size(); ++j)
            if (f.values[i] > f.values[j]) ++inv;
    return inv;
}

void check_fiber_guard(const std::vector<unsigned>& parts) {
    unsigned long total = 0;
    for (unsigned p : parts) {
        if (p == 0) throw DomainError("for_each_fiber_map: parts must be positive");
        total += p;
    }
    if (total > 10) {
        Integer count = factorial(total);
        for (unsigned p : parts) count /= factorial(p);
        throw SizeGuardError("for_each_fiber_map: total " + std::to_string(total) + " would stream " +
                             count.get_str() + " maps; limit is total <= 10");
    }
}

std::vector<FiberMap> enumerate_fiber_maps(const std::vector<unsigned>& parts) {
    std::vector<FiberMap> out;
    for_each_fiber_map(parts, [&](const FiberMap& f) { out.push_back(f); });
    return out;
}

QPolynomial inv_generating(const std::vector<unsigned>& parts) {
    QPolynomial acc;
    for_each_fiber_map(parts, [&](const FiberMap& f) {
        acc.add_to_coeff(inversions(f), Rational(1));
    });
    return acc;
}

void check_composition_guard(unsigned total) {
    if (total > 24)
        throw SizeGuardError("compositions/partitions: total " + std::to_string(total) +
                             " exceeds the supported limit 24");
}

std::vector<Composition> compositions(unsigned total, unsigned d) {
    std::vector<Composition> out;
    for_each_composition(total, d, [&](const Composition& c) { out.push_back(c); });
    return out;
}

std::vector<std::vector<unsigned>> partitions_at_most(unsigned total, unsigned d) {
    std::vector<std::vector<unsigned>> out;
    for_each_partition_at_most(total, d, [&](const std::vector<unsigned>& p) { out.push_back(p); });
    return out;
}

} // namespace qcalc
