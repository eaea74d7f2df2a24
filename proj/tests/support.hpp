#pragma once

// Corpus access and independent oracles shared by the test binaries.
// Nothing here calls into the code paths it is used to check.

#include "fusionwitt/fusion_ring.hpp"
#include "fusionwitt/io.hpp"
#include "fusionwitt/metric_group.hpp"

#include <algorithm>
#include <complex>
#include <filesystem>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace support {

using fusionwitt::FusionRing;
using fusionwitt::MetricCandidate;
using fusionwitt::MetricGroup;
using fusionwitt::Rational;
using fusionwitt::RingCandidate;
using BigInt = boost::multiprecision::cpp_int;

inline std::filesystem::path data_path(std::string const& rel)
{
    return std::filesystem::path(FUSIONWITT_DATA_DIR) / rel;
}

inline FusionRing ring(std::string const& name)
{
    return fusionwitt::parse_ring_file(data_path("rings/" + name + ".fr"));
}

inline MetricGroup metric(std::string const& name)
{
    return fusionwitt::parse_metric_file(data_path("metric/" + name + ".mg"));
}

inline std::vector<std::filesystem::path> corpus(std::string const& dir, std::string const& ext)
{
    std::vector<std::filesystem::path> out;
    for (auto const& e : std::filesystem::directory_iterator(data_path(dir)))
        if (e.path().extension() == ext)
            out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<std::string, FusionRing>> ring_corpus()
{
    std::vector<std::pair<std::string, FusionRing>> out;
    for (auto const& p : corpus("rings", ".fr"))
        out.emplace_back(p.stem().string(), fusionwitt::parse_ring_file(p));
    return out;
}

/// Nondegenerate corpus metric groups.
inline std::vector<std::pair<std::string, MetricGroup>> metric_corpus()
{
    std::vector<std::pair<std::string, MetricGroup>> out;
    for (auto const& p : corpus("metric", ".mg")) {
        auto mg = fusionwitt::parse_metric_file(p);
        if (mg.nondegenerate())
            out.emplace_back(p.stem().string(), std::move(mg));
    }
    return out;
}

inline MetricGroup make_metric(std::vector<std::uint64_t> orders, std::vector<Rational> diag,
                               std::map<std::pair<int, int>, Rational> cross = {})
{
    MetricCandidate c;
    c.orders = std::move(orders);
    c.form.diag = std::move(diag);
    c.form.cross = std::move(cross);
    return MetricGroup(c);
}

// -- fusion rings -------------------------------------------------------------

/// Group ring of Z_{d_1} x ... x Z_{d_k}.
inline RingCandidate group_ring(std::vector<int> const& orders)
{
    int n = 1;
    for (int d : orders)
        n *= d;
    auto coords = [&](int id) {
        std::vector<int> x(orders.size());
        for (std::size_t i = orders.size(); i-- > 0;) {
            x[i] = id % orders[i];
            id /= orders[i];
        }
        return x;
    };
    auto encode = [&](std::vector<int> const& x) {
        int id = 0;
        for (std::size_t i = 0; i < orders.size(); ++i)
            id = id * orders[i] + ((x[i] % orders[i]) + orders[i]) % orders[i];
        return id;
    };
    RingCandidate c;
    c.rank = n;
    c.coeff.assign(static_cast<std::size_t>(n) * n * n, 0);
    for (int a = 0; a < n; ++a) {
        c.labels.push_back("g" + std::to_string(a));
        auto xa = coords(a);
        std::vector<int> neg(xa.size());
        for (std::size_t i = 0; i < xa.size(); ++i)
            neg[i] = -xa[i];
        c.dual.push_back(encode(neg));
        for (int b = 0; b < n; ++b) {
            auto xb = coords(b);
            for (std::size_t i = 0; i < xa.size(); ++i)
                xb[i] += xa[i];
            c.coeff[(static_cast<std::size_t>(a) * n + b) * n + encode(xb)] = 1;
        }
    }
    return c;
}

/// Tensor product of based rings: basis pairs (i, j), index i * rank_b + j.
inline RingCandidate ring_product(RingCandidate const& a, RingCandidate const& b)
{
    int const ra = a.rank, rb = b.rank, r = ra * rb;
    RingCandidate c;
    c.rank = r;
    c.coeff.assign(static_cast<std::size_t>(r) * r * r, 0);
    auto na = [&](int i, int j, int k) { return a.coeff[(static_cast<std::size_t>(i) * ra + j) * ra + k]; };
    auto nb = [&](int i, int j, int k) { return b.coeff[(static_cast<std::size_t>(i) * rb + j) * rb + k]; };
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j) {
            c.labels.push_back(a.labels[i] + "." + b.labels[j]);
            c.dual.push_back(a.dual[i] * rb + b.dual[j]);
        }
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            for (int z = 0; z < r; ++z)
                c.coeff[(static_cast<std::size_t>(x) * r + y) * r + z] =
                    na(x / rb, y / rb, z / rb) * nb(x % rb, y % rb, z % rb);
    return c;
}

// -- exact linear algebra -------------------------------------------------------

/// Fraction-free Gaussian elimination with row pivoting.
inline BigInt bareiss_det(std::vector<std::vector<BigInt>> m)
{
    auto const n = m.size();
    if (n == 0)
        return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// det(t I - A) for an integer matrix.
inline BigInt char_poly_at(fusionwitt::IntMatrix const& a, std::int64_t t)
{
    auto const n = static_cast<std::size_t>(a.rows());
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = (i == j ? t : 0) - a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return bareiss_det(std::move(m));
}

// -- quadratic forms ------------------------------------------------------------

inline Rational frac(std::int64_t a, std::int64_t b)
{
    return Rational(a, b);
}

inline Rational reduce1(Rational r)
{
    auto n = r.numerator() % r.denominator();
    if (n < 0)
        n += r.denominator();
    return Rational(n, r.denominator());
}

/// q straight from the defining sum over coordinates, in rationals.
inline Rational q_direct(MetricGroup const& mg, std::vector<std::int64_t> const& x)
{
    auto const& f = mg.form();
    Rational acc(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += f.diag[i] * (x[i] * x[i]);
        for (std::size_t j = i + 1; j < x.size(); ++j)
            acc += f.cross_at(static_cast<int>(i), static_cast<int>(j)) * (x[i] * x[j]);
    }
    return reduce1(acc);
}

inline std::vector<std::vector<std::int64_t>> all_elements(std::vector<std::uint64_t> const& orders)
{
    std::vector<std::vector<std::int64_t>> out{{}};
    for (auto d : orders) {
        std::vector<std::vector<std::int64_t>> next;
        for (auto const& x : out)
            for (std::uint64_t v = 0; v < d; ++v) {
                auto y = x;
                y.push_back(static_cast<std::int64_t>(v));
                next.push_back(std::move(y));
            }
        out = std::move(next);
    }
    return out;
}

/// Gauss sum in floating point, summed term by term.
inline std::complex<long double> gauss_numeric(MetricGroup const& mg)
{
    std::complex<long double> acc = 0;
    for (auto const& x : all_elements(mg.orders())) {
        auto const q = q_direct(mg, x);
        long double const angle = 2 * std::numbers::pi_v<long double> * q.numerator() / q.denominator();
        acc += std::polar(1.0L, angle);
    }
    return acc;
}

/// True when some subgroup L with q|L = 0 has |L|^2 = |A|, by exhaustive
/// search over subgroups built from mutually orthogonal isotropic elements.
inline bool has_lagrangian(MetricGroup const& mg)
{
    auto const n = mg.size();
    auto const& g = mg.group();
    std::uint64_t target = 1;
    while (target * target < n)
        ++target;
    if (target * target != n)
        return false;
    std::vector<std::size_t> iso;
    for (std::size_t x = 1; x < n; ++x)
        if (mg.q_scaled(x) == 0)
            iso.push_back(x);
    std::set<std::vector<bool>> seen;
    std::function<bool(std::vector<bool> const&, std::size_t)> grow = [&](std::vector<bool> const& sub, std::size_t size) {
        if (size == target)
            return true;
        if (size > target || !seen.insert(sub).second)
            return false;
        for (auto x : iso) {
            if (sub[x])
                continue;
            bool ok = true;
            for (std::size_t y = 0; y < n && ok; ++y)
                if (sub[y] && mg.b_scaled(x, y) != 0)
                    ok = false;
            if (!ok)
                continue;
            // Close sub + <x>.
            std::vector<bool> next = sub;
            std::vector<std::size_t> members;
            for (std::size_t y = 0; y < n; ++y)
                if (sub[y])
                    members.push_back(y);
            std::size_t count = members.size();
            for (std::size_t m = x; m != 0; m = g.add(m, x))
                for (auto y : members) {
                    auto const z = g.add(y, m);
                    if (!next[z]) {
                        next[z] = true;
                        ++count;
                    }
                }
            if (grow(next, count))
                return true;
        }
        return false;
    };
    std::vector<bool> start(n, false);
    start[0] = true;
    return grow(start, 1);
}

/// k-fold orthogonal sum, built directly on the ambient product group.
inline MetricGroup power_sum(MetricGroup const& mg, int k)
{
    std::vector<std::uint64_t> orders;
    fusionwitt::QuadraticForm form;
    int const r = static_cast<int>(mg.orders().size());
    for (int c = 0; c < k; ++c) {
        for (int i = 0; i < r; ++i) {
            orders.push_back(mg.orders()[i]);
            form.diag.push_back(mg.form().diag[i]);
        }
        for (auto const& [ij, v] : mg.form().cross)
            form.cross[{ij.first + c * r, ij.second + c * r}] = v;
    }
    return MetricGroup::ambient(orders, form);
}

/// Least k with the k-fold sum metabolic, by Lagrangian search.
inline int witt_order_oracle(MetricGroup const& mg, int max)
{
    for (int k = 1; k <= max; ++k)
        if (has_lagrangian(power_sum(mg, k)))
            return k;
    return -1;
}

// -- finite abelian groups ------------------------------------------------------

inline std::map<std::uint64_t, std::size_t> order_histogram(std::vector<std::vector<std::size_t>> const& table)
{
    std::map<std::uint64_t, std::size_t> h;
    for (std::size_t x = 0; x < table.size(); ++x) {
        std::uint64_t k = 1;
        for (std::size_t y = x; y != 0; y = table[y][x])
            ++k;
        ++h[x == 0 ? 1 : k];
    }
    return h;
}

inline std::map<std::uint64_t, std::size_t> order_histogram(std::vector<std::uint64_t> const& cyclic)
{
    std::vector<std::uint64_t> orders{1};
    for (auto d : cyclic) {
        std::vector<std::uint64_t> next;
        for (auto o : orders)
            for (std::uint64_t v = 0; v < d; ++v)
                next.push_back(std::lcm(o, d / std::gcd(d, v)));
        orders = std::move(next);
    }
    std::map<std::uint64_t, std::size_t> h;
    for (auto o : orders)
        ++h[o];
    return h;
}

/// Prime-power cyclic orders of a finite abelian group, sorted.
inline std::vector<std::uint64_t> elementary_divisors(std::vector<std::uint64_t> const& cyclic)
{
    std::vector<std::uint64_t> out;
    for (auto d : cyclic)
        for (std::uint64_t p = 2; d > 1; ++p) {
            std::uint64_t pp = 1;
            while (d % p == 0) {
                d /= p;
                pp *= p;
            }
            if (pp > 1)
                out.push_back(pp);
        }
    std::sort(out.begin(), out.end());
    return out;
}

// -- integers --------------------------------------------------------------------

/// n has a square-free divisor c with n / c divisible by at most two primes.
/// Tries every divisor c of n and tests square-freeness by trial division.
inline bool two_prime_form_oracle(std::uint64_t n)
{
    auto distinct_primes = [](std::uint64_t m) {
        int count = 0;
        for (std::uint64_t p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                ++count;
                while (m % p == 0)
                    m /= p;
            }
        return count + (m > 1 ? 1 : 0);
    };
    auto square_free = [](std::uint64_t m) {
        for (std::uint64_t p = 2; p * p <= m; ++p)
            if (m % (p * p) == 0)
                return false;
        return true;
    };
    for (std::uint64_t c = 1; c * c <= n; ++c) {
        if (n % c != 0)
            continue;
        for (auto cc : {c, n / c})
            if (square_free(cc) && distinct_primes(n / cc) <= 2)
                return true;
    }
    return false;
}

// -- generators ------------------------------------------------------------------

/// Random nondegenerate metric group on a small group.
inline MetricGroup random_metric(std::mt19937_64& rng)
{
    static std::vector<std::vector<std::uint64_t>> const shapes = {
        {2}, {3}, {4}, {5}, {7}, {8}, {9}, {6}, {12}, {2, 2}, {2, 4}, {3, 3}, {4, 4}, {2, 6}, {2, 2, 2},
    };
    for (;;) {
        auto const& orders = shapes[rng() % shapes.size()];
        MetricCandidate c;
        c.orders = orders;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            auto const d = static_cast<std::int64_t>(orders[i]);
            auto const den = d % 2 == 0 ? 2 * d : d;
            c.form.diag.push_back(Rational(static_cast<std::int64_t>(rng() % den), den));
            for (std::size_t j = 0; j < i; ++j) {
                auto const g = static_cast<std::int64_t>(std::gcd(orders[i], orders[j]));
                auto const v = static_cast<std::int64_t>(rng() % g);
                if (v != 0)
                    c.form.cross[{static_cast<int>(j), static_cast<int>(i)}] = Rational(v, g);
            }
        }
        MetricGroup mg(c);
        if (mg.nondegenerate())
            return mg;
    }
}

} // namespace support
