#include "fusionwitt/cyclotomic.hpp"

#include "fusionwitt/number_theory.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace fusionwitt {

namespace {

// Exact division of integer polynomials by a monic divisor (lowest degree first).
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, std::vector<std::int64_t> const& den)
{
    auto const dn = den.size() - 1;
    if (num.size() < den.size())
        throw std::logic_error("divide_exact: degree too small");
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        std::int64_t const c = num[i];
        quot[i - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j)
            num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i)
        if (num[i] != 0)
            throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

} // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n)
{
    static std::mutex guard;
    static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
    {
        std::lock_guard lock(guard);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    if (n == 0)
        throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    std::vector<std::int64_t> poly(n + 1, 0);
    poly[0] = -1;
    poly[n] = 1;
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0)
            poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
    std::lock_guard lock(guard);
    cache.emplace(n, poly);
    return poly;
}

CyclotomicInteger::CyclotomicInteger(std::uint64_t order)
    : order_(order)
    , coeffs_(order, 0)
{
    if (order == 0)
        throw std::invalid_argument("cyclotomic order must be positive");
}

CyclotomicInteger CyclotomicInteger::integer(std::uint64_t order, std::int64_t value)
{
    CyclotomicInteger z(order);
    z.coeffs_[0] = value;
    return z;
}

CyclotomicInteger CyclotomicInteger::root(std::uint64_t order, std::int64_t k, std::int64_t c)
{
    CyclotomicInteger z(order);
    z.add_term(k, c);
    return z;
}

CyclotomicInteger CyclotomicInteger::sqrt_of(std::uint64_t m)
{
    if (m == 0)
        return CyclotomicInteger(1);
    std::int64_t outer = 1;
    std::vector<std::uint64_t> primes;
    for (auto const& [p, e] : factorize(m)) {
        outer *= static_cast<std::int64_t>(ipow(p, e / 2));
        if (e % 2)
            primes.push_back(p);
    }
    CyclotomicInteger acc = integer(1, outer);
    for (auto p : primes) {
        CyclotomicInteger s(8);
        if (p == 2) {
            s = root(8, 1) + root(8, 7);
        } else {
            // Quadratic Gauss sum g_p = sqrt(p) (p = 1 mod 4) or i sqrt(p) (p = 3 mod 4).
            CyclotomicInteger g(p);
            for (std::uint64_t x = 1; x < p; ++x)
                g.add_term(static_cast<std::int64_t>(x), legendre(static_cast<std::int64_t>(x), p));
            s = p % 4 == 1 ? g : root(4, 3) * g;
        }
        acc = acc * s;
    }
    return acc;
}

CyclotomicInteger CyclotomicInteger::embed(std::uint64_t m) const
{
    if (m % order_ != 0)
        throw std::invalid_argument("embed: order does not divide target");
    CyclotomicInteger z(m);
    auto const step = m / order_;
    for (std::uint64_t k = 0; k < order_; ++k)
        z.coeffs_[k * step] = coeffs_[k];
    return z;
}

void CyclotomicInteger::add_term(std::int64_t k, std::int64_t c)
{
    auto const n = static_cast<std::int64_t>(order_);
    coeffs_[static_cast<std::size_t>(((k % n) + n) % n)] += c;
}

CyclotomicInteger CyclotomicInteger::conj() const
{
    CyclotomicInteger z(order_);
    for (std::uint64_t k = 0; k < order_; ++k)
        z.coeffs_[(order_ - k) % order_] += coeffs_[k];
    return z;
}

namespace {

std::uint64_t common_order(CyclotomicInteger const& a, CyclotomicInteger const& b)
{
    return std::lcm(a.order(), b.order());
}

} // namespace

CyclotomicInteger operator+(CyclotomicInteger const& a, CyclotomicInteger const& b)
{
    auto const n = common_order(a, b);
    auto z = a.embed(n);
    auto const w = b.embed(n);
    for (std::uint64_t k = 0; k < n; ++k)
        z.coeffs_[k] += w.coeffs_[k];
    return z;
}

CyclotomicInteger operator-(CyclotomicInteger const& a, CyclotomicInteger const& b)
{
    auto const n = common_order(a, b);
    auto z = a.embed(n);
    auto const w = b.embed(n);
    for (std::uint64_t k = 0; k < n; ++k)
        z.coeffs_[k] -= w.coeffs_[k];
    return z;
}

CyclotomicInteger operator*(CyclotomicInteger const& a, CyclotomicInteger const& b)
{
    auto const n = common_order(a, b);
    auto const x = a.embed(n);
    auto const y = b.embed(n);
    CyclotomicInteger z(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (x.coeffs_[i] == 0)
            continue;
        for (std::uint64_t j = 0; j < n; ++j)
            if (y.coeffs_[j] != 0)
                z.coeffs_[(i + j) % n] += x.coeffs_[i] * y.coeffs_[j];
    }
    return z;
}

std::vector<std::int64_t> CyclotomicInteger::reduced() const
{
    auto const phi = cyclotomic_polynomial(order_);
    auto const deg = phi.size() - 1;
    std::vector<std::int64_t> r = coeffs_;
    for (std::size_t i = r.size(); i-- > deg;) {
        std::int64_t const c = r[i];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= deg; ++j)
            r[i - deg + j] -= c * phi[j];
    }
    r.resize(deg);
    return r;
}

bool CyclotomicInteger::is_zero() const
{
    for (auto c : reduced())
        if (c != 0)
            return false;
    return true;
}

std::optional<std::int64_t> CyclotomicInteger::as_integer() const
{
    auto const r = reduced();
    for (std::size_t i = 1; i < r.size(); ++i)
        if (r[i] != 0)
            return std::nullopt;
    return r.empty() ? 0 : r[0];
}

bool operator==(CyclotomicInteger const& a, CyclotomicInteger const& b)
{
    return (a - b).is_zero();
}

} // namespace fusionwitt
