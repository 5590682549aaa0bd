/**
 * @file combinat.hpp
 * @brief Exact combinatorial enumerators: pairings of [[2n]] with the chord
 *        weight statistic, maps with prescribed fiber sizes and their
 *        inversion statistic, compositions and bounded partitions.
 *
 * Enumeration is streaming: visitors receive each object once and nothing is
 * materialized, so oversized requests die on the size guard, not on memory.
 * Visitors return void; independent streams may run in parallel.
 */
#ifndef QCALC_COMBINAT_HPP
#define QCALC_COMBINAT_HPP

#include <utility>
#include <vector>

#include "qcalc/qpolynomial.hpp"

namespace qcalc {

// Perfect matching on [[2n]] = {1,...,2n}, stored canonically:
// a_i < b_i within each pair and a_1 < a_2 < ... < a_n.
struct Pairing {
    std::vector<std::pair<int, int>> pairs;

    Pairing() = default;
    // Canonicalizes (swaps within pairs, sorts by left endpoint) and checks
    // that the pairs partition [[2n]].
    explicit Pairing(std::vector<std::pair<int, int>> raw);

    int n() const { return static_cast<int>(pairs.size()); }
};

// Sum over chords of |((a_i, b_i)) \ P_i|: elements strictly inside the
// chord, minus right endpoints of earlier chords.
long pairing_weight_exponent(const Pairing& alpha);

// w(alpha) as the monomial q^e.
QPolynomial pairing_weight(const Pairing& alpha);

namespace detail {
template <class Visitor>
void pairing_rec(std::vector<int>& free_elems, std::vector<std::pair<int, int>>& acc,
                 Visitor& visit) {
    if (free_elems.empty()) {
        Pairing p;
        p.pairs = acc;
        visit(static_cast<const Pairing&>(p));
        return;
    }
    // Smallest free element pairs with each larger free element in turn;
    // ascending choice of partner gives lexicographic b-sequences.
    const int a = free_elems.front();
    for (std::size_t bi = 1; bi < free_elems.size(); ++bi) {
        const int b = free_elems[bi];
        std::vector<int> rest;
        rest.reserve(free_elems.size() - 2);
        for (std::size_t t = 1; t < free_elems.size(); ++t)
            if (t != bi) rest.push_back(free_elems[t]);
        acc.emplace_back(a, b);
        pairing_rec(rest, acc, visit);
        acc.pop_back();
    }
}
} // namespace detail

void check_pairing_guard(int n);

// Streams every pairing of [[2n]] exactly once, lexicographic in the
// b-sequence; count is (2n-1)!!. n = 0 yields the single empty pairing.
template <class Visitor>
void for_each_pairing(int n, Visitor&& visit) {
    check_pairing_guard(n);
    std::vector<int> elems(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < 2 * n; ++i) elems[static_cast<std::size_t>(i)] = i + 1;
    std::vector<std::pair<int, int>> acc;
    acc.reserve(static_cast<std::size_t>(n));
    detail::pairing_rec(elems, acc, visit);
}

std::vector<Pairing> enumerate_pairings(int n);

// Sum of w(alpha) over all pairings of [[2n]]; equals [1]_{n,2}.
QPolynomial sum_pairing_weights(int n);

// Map [[a]] -> [[n]] with |f^{-1}(i)| = parts[i-1].
struct FiberMap {
    std::vector<int> values;       // values[i] = f(i+1), entries in [[n]]
    std::vector<unsigned> parts;   // fiber sizes

    FiberMap() = default;
    FiberMap(std::vector<int> values, std::vector<unsigned> parts);
};

// |{(i, j) : i < j, f(i) > f(j)}|
unsigned inversions(const FiberMap& f);

namespace detail {
template <class Visitor>
void fiber_rec(std::vector<int>& values, std::size_t pos, std::vector<unsigned>& remaining,
               const std::vector<unsigned>& parts, Visitor& visit) {
    if (pos == values.size()) {
        FiberMap f;
        f.values = values;
        f.parts = parts;
        visit(static_cast<const FiberMap&>(f));
        return;
    }
    for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (remaining[i] == 0) continue;
        --remaining[i];
        values[pos] = static_cast<int>(i) + 1;
        fiber_rec(values, pos + 1, remaining, parts, visit);
        ++remaining[i];
    }
}
} // namespace detail

void check_fiber_guard(const std::vector<unsigned>& parts);

// Streams every map with the prescribed fiber sizes exactly once.
template <class Visitor>
void for_each_fiber_map(const std::vector<unsigned>& parts, Visitor&& visit) {
    check_fiber_guard(parts);
    unsigned total = 0;
    for (unsigned p : parts) total += p;
    std::vector<int> values(total, 0);
    std::vector<unsigned> remaining = parts;
    detail::fiber_rec(values, 0, remaining, parts, visit);
}

std::vector<FiberMap> enumerate_fiber_maps(const std::vector<unsigned>& parts);

// Sum of q^inv(f) over all maps with the prescribed fiber sizes; equals the
// q-multinomial of the parts.
QPolynomial inv_generating(const std::vector<unsigned>& parts);

// Ordered sequence of positive parts with the given sum.
struct Composition {
    std::vector<unsigned> parts;
    unsigned total = 0;
};

void check_composition_guard(unsigned total);

// Streams compositions of `total` into exactly d positive parts, in
// lexicographic order; count is C(total-1, d-1). d > total streams nothing.
template <class Visitor>
void for_each_composition(unsigned total, unsigned d, Visitor&& visit) {
    check_composition_guard(total);
    if (d == 0 || d > total) return;
    std::vector<unsigned> parts(d, 0);
    // Recursive descent over the first part.
    auto rec = [&](auto&& self, unsigned remaining, unsigned idx) -> void {
        if (idx + 1 == d) {
            parts[idx] = remaining;
            Composition c;
            c.parts = parts;
            c.total = total;
            visit(static_cast<const Composition&>(c));
            return;
        }
        for (unsigned first = 1; first + (d - idx - 1) <= remaining; ++first) {
            parts[idx] = first;
            self(self, remaining - first, idx + 1);
        }
    };
    rec(rec, total, 0);
}

std::vector<Composition> compositions(unsigned total, unsigned d);

// Streams partitions of `total` with at most d parts, weakly decreasing,
// largest part first.
template <class Visitor>
void for_each_partition_at_most(unsigned total, unsigned d, Visitor&& visit) {
    check_composition_guard(total);
    std::vector<unsigned> parts;
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part, unsigned slots) -> void {
        if (remaining == 0) {
            visit(static_cast<const std::vector<unsigned>&>(parts));
            return;
        }
        if (slots == 0) return;
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p, slots - 1);
            parts.pop_back();
        }
    };
    rec(rec, total, total, d);
}

std::vector<std::vector<unsigned>> partitions_at_most(unsigned total, unsigned d);

} // namespace qcalc

#endif // QCALC_COMBINAT_HPP
