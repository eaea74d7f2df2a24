#include "fusionwitt/witt.hpp"

#include "fusionwitt/number_theory.hpp"

#include <algorithm>
#include <numeric>

namespace fusionwitt {

std::vector<std::size_t> isotropic_elements(MetricGroup const& mg, std::size_t cap)
{
    if (mg.size() > cap)
        throw CapExceeded("isotropic search: group of order " + std::to_string(mg.size()) + " exceeds the element cap");
    std::vector<std::size_t> out;
    for (std::size_t x = 1; x < mg.size(); ++x)
        if (mg.q_scaled(x) == 0)
            out.push_back(x);
    return out;
}

MetricGroup reduce_once(MetricGroup const& mg, std::size_t x)
{
    if (x == 0 || x >= mg.size())
        throw std::invalid_argument("reduce_once: element must be nonzero and in range");
    if (mg.q_scaled(x) != 0)
        throw std::invalid_argument("reduce_once: element is not isotropic");
    if (!mg.nondegenerate())
        throw std::invalid_argument("reduce_once: form is degenerate");

    abelian::Mask perp(mg.size(), false);
    for (std::size_t y = 0; y < mg.size(); ++y)
        perp[y] = mg.b_scaled(x, y) == 0;
    auto reduced = subquotient(mg, perp, {x});

    auto const k = mg.group().order_of(x);
    if (reduced.size() * k * k != mg.size())
        throw std::logic_error("reduce_once: unexpected order of x^perp/<x>");
    if (!reduced.nondegenerate())
        throw std::logic_error("reduce_once: reduced form is degenerate");
    return reduced;
}

MetricGroup reduce_to_anisotropic(MetricGroup const& mg, std::mt19937_64* chooser, std::vector<ReductionStep>* trace,
                                  std::uint64_t prime, std::size_t cap)
{
    MetricGroup current = mg;
    for (;;) {
        auto const iso = isotropic_elements(current, cap);
        if (iso.empty())
            return current;
        std::size_t x = iso.front();
        if (chooser) {
            std::uniform_int_distribution<std::size_t> pick(0, iso.size() - 1);
            x = iso[pick(*chooser)];
        }
        auto next = reduce_once(current, x);
        if (trace)
            trace->push_back({prime, current.size(), current.group().decode(x), next.size()});
        current = std::move(next);
    }
}

namespace {

std::map<Rational, std::size_t> value_histogram(MetricGroup const& mg)
{
    std::map<Rational, std::size_t> h;
    for (std::size_t x = 0; x < mg.size(); ++x)
        ++h[mg.q(x)];
    return h;
}

struct IsoSearch
{
    MetricGroup const& a;
    MetricGroup const& b;
    std::vector<std::size_t> gens;                    // generators of a
    std::vector<std::vector<std::size_t>> candidates;  // images allowed for each generator
    std::vector<std::size_t> image;

    bool extend(std::size_t i)
    {
        if (i == gens.size()) {
            auto const s = abelian::span(b, image);
            return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)) == b.size();
        }
        for (auto y : candidates[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                ok = b.b(image[j], y) == a.b(gens[j], gens[i]);
            if (!ok)
                continue;
            image.push_back(y);
            if (extend(i + 1))
                return true;
            image.pop_back();
        }
        return false;
    }
};

} // namespace

bool metric_iso(MetricGroup const& a, MetricGroup const& b, std::size_t cap)
{
    if (a.size() > cap || b.size() > cap)
        throw CapExceeded("metric_iso: group exceeds the element cap");
    if (a.size() != b.size())
        return false;
    auto const ca = a.group().is_canonical() ? a : canonicalize(a);
    auto const cb = b.group().is_canonical() ? b : canonicalize(b);
    if (ca.orders() != cb.orders())
        return false;
    if (value_histogram(ca) != value_histogram(cb))
        return false;

    IsoSearch search{ca, cb, {}, {}, {}};
    auto const k = ca.orders().size();
    for (std::size_t i = 0; i < k; ++i) {
        MetricGroup::Element e(k, 0);
        e[i] = 1;
        auto const g = ca.group().encode(e);
        search.gens.push_back(g);
        std::vector<std::size_t> cand;
        for (std::size_t y = 0; y < cb.size(); ++y)
            if (cb.group().order_of(y) == ca.orders()[i] && cb.q(y) == ca.q(g))
                cand.push_back(y);
        search.candidates.push_back(std::move(cand));
    }
    return search.extend(0);
}

WittClassReport pointed_witt_class_report(MetricGroup const& mg, std::size_t cap)
{
    if (!mg.nondegenerate())
        throw std::invalid_argument("Witt class requires a nondegenerate form");
    WittClassReport out;
    for (auto const& [p, part] : sylow_decompose(mg, cap)) {
        auto const before = gauss_sum(part, cap);
        auto rep = reduce_to_anisotropic(part, nullptr, &out.trace, p, cap);
        auto const after = gauss_sum(rep, cap);
        auto const ratio = exact_isqrt(part.size() / rep.size());
        if (ratio < 0 || before.eighths != after.eighths ||
            !(before.value == CyclotomicInteger::integer(1, ratio) * after.value))
            throw std::logic_error("isotropic reduction changed the normalized Gauss sum");
        if (p != 2 && rep.size() != 1 && rep.size() != p && rep.size() != p * p)
            throw std::logic_error("anisotropic representative for odd p has order " + std::to_string(rep.size()));
        out.gauss.emplace(p, std::make_pair(before, after));
        if (rep.size() > 1)
            out.cls.parts.emplace(p, std::move(rep));
    }
    return out;
}

PointedWittClass pointed_witt_class(MetricGroup const& mg, std::size_t cap)
{
    return pointed_witt_class_report(mg, cap).cls;
}

bool same_class(PointedWittClass const& a, PointedWittClass const& b, std::size_t cap)
{
    if (a.parts.size() != b.parts.size())
        return false;
    for (auto const& [p, rep] : a.parts) {
        auto it = b.parts.find(p);
        if (it == b.parts.end() || !metric_iso(rep, it->second, cap))
            return false;
    }
    return true;
}

PointedWittClass class_multiply(PointedWittClass const& a, PointedWittClass const& b, std::size_t cap)
{
    PointedWittClass out;
    std::map<std::uint64_t, MetricGroup> sums = a.parts;
    for (auto const& [p, rep] : b.parts) {
        auto it = sums.find(p);
        if (it == sums.end())
            sums.emplace(p, rep);
        else
            it->second = direct_sum(it->second, rep, cap);
    }
    for (auto& [p, group] : sums) {
        auto rep = reduce_to_anisotropic(group, nullptr, nullptr, p, cap);
        if (rep.size() > 1)
            out.parts.emplace(p, std::move(rep));
    }
    return out;
}

PointedWittClass class_inverse(PointedWittClass const& c)
{
    PointedWittClass out;
    for (auto const& [p, rep] : c.parts)
        out.parts.emplace(p, inverse_form(rep));
    return out;
}

std::optional<int> class_order(PointedWittClass const& c, int cap, std::size_t element_cap)
{
    PointedWittClass power = c;
    int n = 1;
    while (!power.is_identity()) {
        if (n >= cap)
            return std::nullopt;
        power = class_multiply(power, c, element_cap);
        ++n;
    }
    return n;
}

std::uint64_t GeneratedSubgroup::exponent() const
{
    return invariant_factors.empty() ? 1 : invariant_factors.back();
}

GeneratedSubgroup generated_subgroup(std::vector<PointedWittClass> const& gens, std::size_t cap, std::size_t element_cap)
{
    GeneratedSubgroup out;
    out.elements.push_back(PointedWittClass{});
    auto find = [&](PointedWittClass const& c) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < out.elements.size(); ++i)
            if (same_class(out.elements[i], c, element_cap))
                return i;
        return std::nullopt;
    };
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
        for (auto const& g : gens) {
            auto prod = class_multiply(out.elements[i], g, element_cap);
            if (find(prod))
                continue;
            if (out.elements.size() >= cap)
                throw CapExceeded("generated subgroup exceeds the closure cap " + std::to_string(cap));
            out.elements.push_back(std::move(prod));
        }
    }
    auto const n = out.elements.size();
    out.table.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            auto const k = find(class_multiply(out.elements[i], out.elements[j], element_cap));
            if (!k)
                throw std::logic_error("generated subgroup is not closed");
            out.table[i][j] = out.table[j][i] = *k;
        }
    if (!abelian::is_abelian_group_table(out.table))
        throw std::logic_error("Witt class products do not form an abelian group");
    out.invariant_factors = abelian::invariant_factors(out.table);
    return out;
}

WittWord ising_word(int m)
{
    if (m % 2 == 0)
        throw std::invalid_argument("an Ising braided category has odd exponent, got " + std::to_string(m));
    return WittWord{{}, ((m % 16) + 16) % 16};
}

WittWord pointed_word(PointedWittClass c)
{
    return WittWord{std::move(c), 0};
}

WittWord word_compose(WittWord const& u, WittWord const& v, std::size_t cap)
{
    return WittWord{class_multiply(u.pointed, v.pointed, cap), (u.ising_exponent + v.ising_exponent) % 16};
}

WittWord word_inverse(WittWord const& u)
{
    return WittWord{class_inverse(u.pointed), (16 - u.ising_exponent) % 16};
}

bool word_equal(WittWord const& u, WittWord const& v, std::size_t cap)
{
    return u.ising_exponent == v.ising_exponent && same_class(u.pointed, v.pointed, cap);
}

std::optional<int> word_order(WittWord const& u, int cap, std::size_t element_cap)
{
    WittWord power = u;
    int n = 1;
    while (!(power.ising_exponent == 0 && power.pointed.is_identity())) {
        if (n >= cap)
            return std::nullopt;
        power = word_compose(power, u, element_cap);
        ++n;
    }
    return n;
}

} // namespace fusionwitt
