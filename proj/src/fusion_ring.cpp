#include "fusionwitt/fusion_ring.hpp"

#include "fusionwitt/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace fusionwitt {

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::Malformed: return "malformed";
    case ViolationKind::NegativeCoefficient: return "negative-coefficient";
    case ViolationKind::Duality: return "duality";
    case ViolationKind::Unit: return "unit";
    case ViolationKind::Rigidity: return "rigidity";
    case ViolationKind::Commutativity: return "commutativity";
    case ViolationKind::Associativity: return "associativity";
    }
    return "unknown";
}

namespace {

std::string describe(std::vector<Violation> const& vs)
{
    std::ostringstream os;
    os << "invalid fusion ring (" << vs.size() << " violation" << (vs.size() == 1 ? "" : "s") << ")";
    if (!vs.empty())
        os << ": " << to_string(vs.front().kind) << ": " << vs.front().message;
    return os.str();
}

std::string index_text(std::initializer_list<int> idx)
{
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (int i : idx) {
        os << (first ? "" : ",") << i;
        first = false;
    }
    os << ')';
    return os.str();
}

std::vector<Violation> structural_violations(RingCandidate const& raw)
{
    std::vector<Violation> out;
    if (raw.rank < 1) {
        out.push_back({ViolationKind::Malformed, {raw.rank}, "rank must be positive"});
        return out;
    }
    auto const r = static_cast<std::size_t>(raw.rank);
    if (raw.labels.size() != r)
        out.push_back({ViolationKind::Malformed, {static_cast<int>(raw.labels.size())}, "label count differs from rank"});
    else if (std::set<std::string>(raw.labels.begin(), raw.labels.end()).size() != r)
        out.push_back({ViolationKind::Malformed, {}, "labels are not distinct"});
    if (raw.dual.size() != r)
        out.push_back({ViolationKind::Malformed, {static_cast<int>(raw.dual.size())}, "dual length differs from rank"});
    else
        for (std::size_t i = 0; i < r; ++i)
            if (raw.dual[i] < 0 || raw.dual[i] >= raw.rank)
                out.push_back({ViolationKind::Malformed, {static_cast<int>(i)}, "dual index out of range"});
    if (raw.coeff.size() != r * r * r)
        out.push_back({ViolationKind::Malformed, {static_cast<int>(raw.coeff.size())}, "coefficient array is not rank^3"});
    return out;
}

} // namespace

std::vector<Violation> validate_ring(RingCandidate const& raw)
{
    auto out = structural_violations(raw);
    if (!out.empty())
        return out;

    int const r = raw.rank;
    auto N = [&](int i, int j, int k) { return raw.coeff[(static_cast<std::size_t>(i) * r + j) * r + k]; };
    auto const& dual = raw.dual;

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (N(i, j, k) < 0)
                    out.push_back({ViolationKind::NegativeCoefficient, {i, j, k}, "N" + index_text({i, j, k}) + " < 0"});

    if (dual[0] != 0)
        out.push_back({ViolationKind::Duality, {0}, "dual(0) must be 0"});
    for (int i = 0; i < r; ++i)
        if (dual[dual[i]] != i)
            out.push_back({ViolationKind::Duality, {i}, "dual is not an involution at " + std::to_string(i)});

    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            std::int64_t const delta = j == k ? 1 : 0;
            if (N(0, j, k) != delta)
                out.push_back({ViolationKind::Unit, {0, j, k}, "N" + index_text({0, j, k}) + " != delta"});
            if (N(j, 0, k) != delta)
                out.push_back({ViolationKind::Unit, {j, 0, k}, "N" + index_text({j, 0, k}) + " != delta"});
        }

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::int64_t const expect = j == dual[i] ? 1 : 0;
            if (N(i, j, 0) != expect)
                out.push_back({ViolationKind::Rigidity, {i, j, 0},
                               "N" + index_text({i, j, 0}) + " = " + std::to_string(N(i, j, 0)) + ", expected " + std::to_string(expect)});
            for (int k = 1; k < r; ++k) {
                auto const v = N(i, j, k);
                if (v != N(dual[i], k, j) || v != N(k, dual[j], i))
                    out.push_back({ViolationKind::Rigidity, {i, j, k}, "Frobenius reciprocity fails at " + index_text({i, j, k})});
            }
        }

    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (N(i, j, k) != N(j, i, k))
                    out.push_back({ViolationKind::Commutativity, {i, j, k}, "N" + index_text({i, j, k}) + " != N" + index_text({j, i, k})});

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) {
                    std::int64_t lhs = 0, rhs = 0;
                    for (int m = 0; m < r; ++m) {
                        lhs += N(i, j, m) * N(m, k, l);
                        rhs += N(j, k, m) * N(i, m, l);
                    }
                    if (lhs != rhs)
                        out.push_back({ViolationKind::Associativity, {i, j, k, l},
                                       "(x_i x_j) x_k != x_i (x_j x_k) at " + index_text({i, j, k, l})});
                }
    return out;
}

InvalidRing::InvalidRing(std::vector<Violation> violations)
    : std::runtime_error(describe(violations))
    , violations_(std::move(violations))
{}

FusionRing::FusionRing(RingCandidate raw, bool force)
    : raw_(std::move(raw))
{
    auto violations = force ? structural_violations(raw_) : validate_ring(raw_);
    if (!violations.empty())
        throw InvalidRing(std::move(violations));
    rank_ = raw_.rank;
    labels_ = raw_.labels;
    dual_ = raw_.dual;
    coeff_ = raw_.coeff;
}

int FusionRing::index_of(std::string const& label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw std::out_of_range("unknown simple label '" + label + "'");
    return static_cast<int>(it - labels_.begin());
}

IntMatrix FusionRing::left_matrix(int i) const
{
    IntMatrix m(rank_, rank_);
    for (int j = 0; j < rank_; ++j)
        for (int k = 0; k < rank_; ++k)
            m(j, k) = N(i, j, k);
    return m;
}

std::vector<int> FusionRing::constituents(int i, int j) const
{
    std::vector<int> out;
    for (int k = 0; k < rank_; ++k)
        if (N(i, j, k) > 0)
            out.push_back(k);
    return out;
}

bool Subring::contains(int i) const
{
    return std::binary_search(members.begin(), members.end(), i);
}

namespace {

void check_index(FusionRing const& ring, int x)
{
    if (x < 0 || x >= ring.rank())
        throw std::out_of_range("simple index " + std::to_string(x) + " out of range");
}

bool is_invertible(FusionRing const& ring, int i)
{
    int const d = ring.dual(i);
    if (ring.N(i, d, 0) != 1)
        return false;
    std::int64_t total = 0;
    for (int k = 0; k < ring.rank(); ++k)
        total += ring.N(i, d, k);
    return total == 1;
}

} // namespace

InvertibleGroup invertibles(FusionRing const& ring)
{
    InvertibleGroup g;
    for (int i = 0; i < ring.rank(); ++i)
        if (is_invertible(ring, i))
            g.members.push_back(i);
    auto position = [&](int k) -> std::size_t {
        auto it = std::lower_bound(g.members.begin(), g.members.end(), k);
        if (it == g.members.end() || *it != k)
            throw RingConsistencyError("product of invertibles is not invertible");
        return static_cast<std::size_t>(it - g.members.begin());
    };
    for (int a : g.members) {
        std::vector<std::size_t> row;
        for (int b : g.members) {
            auto c = ring.constituents(a, b);
            if (c.size() != 1 || ring.N(a, b, c[0]) != 1)
                throw RingConsistencyError("product of invertibles is not simple");
            row.push_back(position(c[0]));
        }
        g.table.push_back(std::move(row));
    }
    if (!abelian::is_abelian_group_table(g.table))
        throw RingConsistencyError("invertible objects do not form an abelian group");
    g.invariant_factors = abelian::invariant_factors(g.table);
    return g;
}

std::vector<int> stabilizer(FusionRing const& ring, int x)
{
    check_index(ring, x);
    std::vector<int> out;
    for (int g = 0; g < ring.rank(); ++g)
        if (is_invertible(ring, g) && ring.N(g, x, x) == 1)
            out.push_back(g);
    return out;
}

TensorSquare tensor_square_check(FusionRing const& ring, int x)
{
    check_index(ring, x);
    auto const stab = stabilizer(ring, x);
    int const xd = ring.dual(x);
    TensorSquare out;
    for (int y = 0; y < ring.rank(); ++y) {
        auto const m = ring.N(x, xd, y);
        if (is_invertible(ring, y)) {
            out.invertible[y] = m;
            std::int64_t const expect = std::binary_search(stab.begin(), stab.end(), y) ? 1 : 0;
            if (m != expect)
                throw RingConsistencyError("invertible part of " + ring.label(x) + " (x) " + ring.label(xd) +
                                           " disagrees with the stabilizer at " + ring.label(y));
        } else if (m != 0) {
            out.non_invertible[y] = m;
        }
    }
    return out;
}

Subring subring_generated(FusionRing const& ring, std::vector<int> const& seed)
{
    std::vector<bool> in(ring.rank(), false);
    in[0] = true;
    for (int s : seed) {
        check_index(ring, s);
        in[s] = true;
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < ring.rank(); ++i) {
            if (!in[i])
                continue;
            if (!in[ring.dual(i)]) {
                in[ring.dual(i)] = true;
                grew = true;
            }
            for (int j = 0; j < ring.rank(); ++j) {
                if (!in[j])
                    continue;
                for (int k : ring.constituents(i, j))
                    if (!in[k]) {
                        in[k] = true;
                        grew = true;
                    }
            }
        }
    }
    Subring out;
    for (int i = 0; i < ring.rank(); ++i)
        if (in[i])
            out.members.push_back(i);
    return out;
}

Subring adjoint_of(FusionRing const& ring, Subring const& sub)
{
    std::vector<int> seed;
    for (int x : sub.members)
        for (int k : ring.constituents(x, ring.dual(x)))
            seed.push_back(k);
    return subring_generated(ring, seed);
}

Subring adjoint_subring(FusionRing const& ring)
{
    Subring all;
    all.members.resize(ring.rank());
    std::iota(all.members.begin(), all.members.end(), 0);
    return adjoint_of(ring, all);
}

GradingData universal_grading(FusionRing const& ring)
{
    int const r = ring.rank();
    auto const ad = adjoint_subring(ring);

    // x ~ y iff x (x) y* meets the adjoint subring.
    std::vector<int> block_of(r, -1);
    GradingData out;
    for (int x = 0; x < r; ++x) {
        if (block_of[x] >= 0)
            continue;
        auto const b = out.components.size();
        out.components.emplace_back();
        for (int y = x; y < r; ++y) {
            if (block_of[y] >= 0)
                continue;
            bool related = false;
            for (int k : ring.constituents(x, ring.dual(y)))
                related = related || ad.contains(k);
            if (related) {
                block_of[y] = static_cast<int>(b);
                out.components[b].push_back(y);
            }
        }
    }
    if (out.components.front() != ad.members)
        throw RingConsistencyError("neutral grading component differs from the adjoint subring");
    out.neutral = 0;

    auto const n = out.components.size();
    out.table.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            int target = -1;
            for (int x : out.components[a])
                for (int y : out.components[b])
                    for (int k : ring.constituents(x, y)) {
                        if (target < 0)
                            target = block_of[k];
                        else if (target != block_of[k])
                            throw RingConsistencyError("grading product is not well defined");
                    }
            if (target < 0)
                throw RingConsistencyError("empty product of grading components");
            out.table[a][b] = static_cast<std::size_t>(target);
        }
    if (!abelian::is_abelian_group_table(out.table))
        throw RingConsistencyError("grading components do not form an abelian group");
    out.invariant_factors = abelian::invariant_factors(out.table);
    out.group_name = group_name(out.invariant_factors);
    return out;
}

NilpotencyResult nilpotency(FusionRing const& ring, int max_depth)
{
    NilpotencyResult out;
    Subring current;
    current.members.resize(ring.rank());
    std::iota(current.members.begin(), current.members.end(), 0);
    out.tower.push_back(current);
    for (int depth = 0; depth < max_depth; ++depth) {
        if (current.members.size() == 1) {
            out.nilpotent = true;
            return out;
        }
        auto next = adjoint_of(ring, current);
        if (next == current)
            return out;
        if (next.members.size() > current.members.size())
            throw std::logic_error("adjoint tower increased");
        out.tower.push_back(next);
        current = std::move(next);
    }
    if (current.members.size() == 1) {
        out.nilpotent = true;
        return out;
    }
    throw std::logic_error("adjoint tower did not stabilize within max_depth");
}

std::string group_name(std::vector<std::uint64_t> const& invariant_factors)
{
    if (invariant_factors.empty())
        return "trivial";
    std::string s;
    for (auto d : invariant_factors) {
        if (!s.empty())
            s += " x ";
        s += "Z_" + std::to_string(d);
    }
    return s;
}

} // namespace fusionwitt
