#pragma once

// Basis extraction for explicitly enumerated finite abelian groups.
//
// A Group here is anything exposing
//     std::size_t size() const;            elements are 0 .. size()-1, 0 is the identity
//     std::size_t add(std::size_t, std::size_t) const;
//     std::size_t neg(std::size_t) const;
// Subgroups are membership masks over the element ids.

#include "fusionwitt/number_theory.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace fusionwitt::abelian {

using Mask = std::vector<bool>;

struct CyclicFactor
{
    std::size_t generator;
    std::uint64_t order;
};

template <class Group>
std::size_t scale(Group const& g, std::uint64_t n, std::size_t x)
{
    std::size_t acc = 0;
    while (n) {
        if (n & 1)
            acc = g.add(acc, x);
        x = g.add(x, x);
        n >>= 1;
    }
    return acc;
}

/// Order of x modulo the subgroup `sub`.
template <class Group>
std::uint64_t order_mod(Group const& g, Mask const& sub, std::size_t x)
{
    std::uint64_t n = 1;
    std::size_t y = x;
    while (!sub[y]) {
        y = g.add(y, x);
        ++n;
    }
    return n;
}

/// sub + <x>, where sub is a subgroup.
template <class Group>
Mask extend_span(Group const& g, Mask const& sub, std::size_t x)
{
    std::vector<std::size_t> multiples;
    for (std::size_t y = x; !sub[y]; y = g.add(y, x))
        multiples.push_back(y);
    Mask out = sub;
    for (std::size_t s = 0; s < sub.size(); ++s) {
        if (!sub[s])
            continue;
        for (auto m : multiples)
            out[g.add(s, m)] = true;
    }
    return out;
}

template <class Group>
Mask span(Group const& g, std::span<const std::size_t> gens)
{
    Mask out(g.size(), false);
    out[0] = true;
    for (auto x : gens)
        out = extend_span(g, out, x);
    return out;
}

/// Invariant-factor basis of H/K, where `in_h` masks a subgroup H and K is
/// generated by `killed` (K must lie inside H). Returned generators are
/// elements of H; orders are > 1 and ascend in divisibility order.
/// Ties are broken toward the smallest element id, so the output is
/// deterministic.
template <class Group>
std::vector<CyclicFactor> decompose(Group const& g, Mask const& in_h, std::span<const std::size_t> killed = {})
{
    Mask const base = span(g, killed);
    std::size_t h_count = 0, k_count = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        h_count += in_h[i];
        k_count += base[i];
        if (base[i] && !in_h[i])
            throw std::invalid_argument("decompose: killed subgroup is not contained in H");
    }
    std::uint64_t const quotient_order = h_count / k_count;

    // Per prime: basis elements with descending p-power orders.
    std::vector<std::vector<CyclicFactor>> primary;
    for (auto const& [p, e] : factorize(quotient_order)) {
        std::vector<CyclicFactor> basis;
        std::vector<Mask> levels{base};
        for (;;) {
            Mask const& top = levels.back();
            std::size_t best = 0;
            std::uint64_t best_order = 1;
            for (std::size_t x = 0; x < g.size(); ++x) {
                if (!in_h[x] || top[x])
                    continue;
                std::uint64_t const o = order_mod(g, top, x);
                if (o > best_order && is_power_of(o, p)) {
                    best = x;
                    best_order = o;
                }
            }
            if (best_order == 1)
                break;

            // Lift down the tower so that the order is exact modulo K.
            std::size_t c = best;
            for (std::size_t s = basis.size(); s-- > 0;) {
                Mask const& below = levels[s];
                std::size_t const b = basis[s].generator;
                std::size_t y = scale(g, best_order, c);
                std::size_t const nb = g.neg(b);
                std::uint64_t m = 0;
                while (!below[y]) {
                    y = g.add(y, nb);
                    ++m;
                    if (m > basis[s].order)
                        throw std::logic_error("decompose: lift failed");
                }
                if (m % best_order != 0)
                    throw std::logic_error("decompose: lift coefficient not divisible");
                c = g.add(c, scale(g, m / best_order, nb));
            }
            if (order_mod(g, base, c) != best_order)
                throw std::logic_error("decompose: lifted element has wrong order");
            basis.push_back({c, best_order});
            levels.push_back(extend_span(g, top, c));
        }
        primary.push_back(std::move(basis));
    }

    std::size_t rank = 0;
    for (auto const& b : primary)
        rank = std::max(rank, b.size());
    std::vector<CyclicFactor> out;
    for (std::size_t i = 0; i < rank; ++i) {
        CyclicFactor f{0, 1};
        for (auto const& b : primary) {
            if (i < b.size()) {
                f.generator = g.add(f.generator, b[i].generator);
                f.order *= b[i].order;
            }
        }
        out.push_back(f);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

/// Group given by a full multiplication table (identity at index 0).
class TableGroup
{
public:
    explicit TableGroup(std::vector<std::vector<std::size_t>> table)
        : table_(std::move(table))
        , inverse_(table_.size())
    {
        for (std::size_t a = 0; a < table_.size(); ++a)
            for (std::size_t b = 0; b < table_.size(); ++b)
                if (table_[a][b] == 0)
                    inverse_[a] = b;
    }
    std::size_t size() const { return table_.size(); }
    std::size_t add(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t neg(std::size_t a) const { return inverse_[a]; }

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
};

/// Invariant factors of an abelian group given by its table.
inline std::vector<std::uint64_t> invariant_factors(std::vector<std::vector<std::size_t>> const& table)
{
    TableGroup const g(table);
    Mask const all(g.size(), true);
    std::vector<std::uint64_t> out;
    for (auto const& f : decompose(g, all))
        out.push_back(f.order);
    return out;
}

/// Checks identity, inverses, associativity and commutativity of a table.
inline bool is_abelian_group_table(std::vector<std::vector<std::size_t>> const& table)
{
    std::size_t const n = table.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (table[a].size() != n || table[0][a] != a || table[a][0] != a)
            return false;
        bool has_inverse = false;
        for (std::size_t b = 0; b < n; ++b) {
            if (table[a][b] >= n || table[a][b] != table[b][a])
                return false;
            has_inverse = has_inverse || table[a][b] == 0;
        }
        if (!has_inverse)
            return false;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    return false;
    return true;
}

} // namespace fusionwitt::abelian
