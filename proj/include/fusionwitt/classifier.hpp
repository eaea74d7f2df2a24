#pragma once

// Sufficient conditions for solvability and weak group-theoreticity from
// Frobenius-Perron dimension data.

#include "fusionwitt/fp_dims.hpp"
#include "fusionwitt/fusion_ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fusionwitt {

/// n = p^a q^b c with c square-free and coprime to p and q, p < q.
struct Factorization
{
    std::optional<std::uint64_t> p;
    unsigned a = 0;
    std::optional<std::uint64_t> q;
    unsigned b = 0;
    std::uint64_t c = 1;

    std::uint64_t value() const;
    bool operator==(Factorization const&) const = default;
};

std::string to_string(Factorization const& f);

std::optional<Factorization> factor_pac(std::uint64_t n);
std::optional<Factorization> factor_paqbc(std::uint64_t n);

/// Structurally different search: some square-free divisor c of n leaves
/// n / c with at most two distinct prime factors.
bool has_two_prime_form_by_divisors(std::uint64_t n);

enum class VerdictKind
{
    SolvableSinglePrime,
    WGTTwoPrimes,
    WGTBelow1800,
    SolvableOddBelow33075,
    Unknown,
};

std::string to_string(VerdictKind kind);

struct DimensionVerdict
{
    VerdictKind kind = VerdictKind::Unknown;
    std::optional<Factorization> witness;
    /// Prime whose powers are all (FPdim X)^2, when the verdict came from simple dimensions.
    std::optional<std::uint64_t> simple_dim_prime;
    bool pointed = false;
    std::vector<std::string> notes;
};

DimensionVerdict verdict_dimension(std::uint64_t n);
DimensionVerdict verdict_ring(FusionRing const& ring, double tolerance = default_tolerance);

constexpr std::uint64_t default_scan_cap = 10'000'000;

/// n < limit (odd n only when odd_only) with no p^a q^b c factorization.
std::vector<std::uint64_t> scan_exceptions(std::uint64_t limit, bool odd_only, std::uint64_t cap = default_scan_cap);

/// Exceptional values asserted by the published bound theorems for this range,
/// or nullopt when the range is not covered by those assertions.
std::optional<std::vector<std::uint64_t>> claimed_exceptions(std::uint64_t limit, bool odd_only);

} // namespace fusionwitt
