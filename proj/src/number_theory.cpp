#include "fusionwitt/number_theory.hpp"

#include <cmath>
#include <stdexcept>

namespace fusionwitt {

Factors factorize(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("factorize: zero has no factorization");
    Factors out;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1u);
    return out;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

bool is_square_free(std::uint64_t n)
{
    for (auto const& [p, e] : factorize(n))
        if (e > 1)
            return false;
    return true;
}

std::int64_t exact_isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r * r == n ? static_cast<std::int64_t>(r) : -1;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
    std::uint64_t r = 1;
    while (exp--)
        r *= base;
    return r;
}

int legendre(std::int64_t a, std::uint64_t p)
{
    auto const m = static_cast<std::int64_t>(p);
    std::int64_t x = ((a % m) + m) % m;
    if (x == 0)
        return 0;
    // Euler's criterion
    std::uint64_t result = 1, base = static_cast<std::uint64_t>(x), e = (p - 1) / 2;
    while (e) {
        if (e & 1)
            result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % p);
        base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % p);
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

bool is_power_of(std::uint64_t n, std::uint64_t p)
{
    if (n == 0 || p < 2)
        return false;
    while (n % p == 0)
        n /= p;
    return n == 1;
}

} // namespace fusionwitt
