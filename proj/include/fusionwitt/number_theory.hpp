#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fusionwitt {

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
using Factors = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Deterministic trial division. factorize(1) is empty.
Factors factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);
bool is_square_free(std::uint64_t n);

/// Returns r with r*r == n, or -1 when n is not a perfect square.
std::int64_t exact_isqrt(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}.
int legendre(std::int64_t a, std::uint64_t p);

/// True when n == p^k for some k >= 0.
bool is_power_of(std::uint64_t n, std::uint64_t p);

} // namespace fusionwitt
