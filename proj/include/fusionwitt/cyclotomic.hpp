#pragma once

// Exact arithmetic in Z[zeta_n]. Elements are stored as coefficient vectors
// over the powers 1, zeta, ..., zeta^{n-1}; equality reduces modulo the
// cyclotomic polynomial.

#include <cstdint>
#include <optional>
#include <vector>

namespace fusionwitt {

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(std::uint64_t n);

class CyclotomicInteger
{
public:
    /// Zero in Z[zeta_n].
    explicit CyclotomicInteger(std::uint64_t order = 1);

    static CyclotomicInteger integer(std::uint64_t order, std::int64_t value);
    /// c * zeta_n^k
    static CyclotomicInteger root(std::uint64_t order, std::int64_t k, std::int64_t c = 1);
    /// Exact square root of a positive integer inside Z[zeta_L] for a suitable L.
    static CyclotomicInteger sqrt_of(std::uint64_t m);

    std::uint64_t order() const { return order_; }
    std::vector<std::int64_t> const& coefficients() const { return coeffs_; }

    /// Same element viewed in Z[zeta_m]; `order()` must divide m.
    CyclotomicInteger embed(std::uint64_t m) const;

    /// Adds c to the coefficient of zeta^k.
    void add_term(std::int64_t k, std::int64_t c);

    CyclotomicInteger conj() const;

    friend CyclotomicInteger operator+(CyclotomicInteger const& a, CyclotomicInteger const& b);
    friend CyclotomicInteger operator-(CyclotomicInteger const& a, CyclotomicInteger const& b);
    friend CyclotomicInteger operator*(CyclotomicInteger const& a, CyclotomicInteger const& b);
    friend bool operator==(CyclotomicInteger const& a, CyclotomicInteger const& b);

    bool is_zero() const;
    /// The value when the element lies in Z.
    std::optional<std::int64_t> as_integer() const;

    /// Remainder modulo the cyclotomic polynomial (lowest degree first).
    std::vector<std::int64_t> reduced() const;

private:
    std::uint64_t order_;
    std::vector<std::int64_t> coeffs_;
};

} // namespace fusionwitt
