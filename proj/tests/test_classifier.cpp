#include "support.hpp"

#include "fusionwitt/classifier.hpp"
#include "fusionwitt/number_theory.hpp"

#include <gtest/gtest.h>

using namespace fusionwitt;
using support::ring;

namespace {

Factorization fac(std::optional<std::uint64_t> p, unsigned a, std::optional<std::uint64_t> q, unsigned b, std::uint64_t c)
{
    return Factorization{p, a, q, b, c};
}

bool note_mentions(DimensionVerdict const& v, std::string const& needle)
{
    return std::any_of(v.notes.begin(), v.notes.end(), [&](auto const& n) { return n.find(needle) != std::string::npos; });
}

} // namespace

TEST(FactorPac, Examples)
{
    EXPECT_EQ(factor_pac(12), fac(2, 2, std::nullopt, 0, 3));
    EXPECT_EQ(factor_pac(1), fac(std::nullopt, 0, std::nullopt, 0, 1));
    EXPECT_FALSE(factor_pac(900));
    EXPECT_EQ(factor_pac(30), fac(std::nullopt, 0, std::nullopt, 0, 30));
    EXPECT_EQ(factor_pac(2 * 27 * 5), fac(3, 3, std::nullopt, 0, 10));
}

TEST(FactorPaqbc, Examples)
{
    EXPECT_EQ(factor_paqbc(60), fac(2, 2, std::nullopt, 0, 15));
    EXPECT_FALSE(factor_paqbc(900));
    EXPECT_FALSE(factor_paqbc(1764));
    EXPECT_EQ(factor_paqbc(36), fac(2, 2, 3, 2, 1));
    EXPECT_EQ(factor_paqbc(4 * 25 * 3), fac(2, 2, 5, 2, 3));
}

TEST(VerdictDimension, Examples)
{
    auto const v36 = verdict_dimension(36);
    EXPECT_EQ(v36.kind, VerdictKind::WGTTwoPrimes);
    EXPECT_EQ(v36.witness, fac(2, 2, 3, 2, 1));

    auto const v900 = verdict_dimension(900);
    EXPECT_EQ(v900.kind, VerdictKind::WGTBelow1800);
    EXPECT_FALSE(v900.witness);
    EXPECT_TRUE(note_mentions(v900, "900"));

    auto const v27225 = verdict_dimension(27225);
    EXPECT_EQ(v27225.kind, VerdictKind::Unknown);
    EXPECT_TRUE(note_mentions(v27225, "11025"));
}

TEST(VerdictDimension, BoundCasesAndFallthrough)
{
    EXPECT_EQ(verdict_dimension(12).kind, VerdictKind::SolvableSinglePrime);
    auto const v11025 = verdict_dimension(11025);
    EXPECT_EQ(v11025.kind, VerdictKind::SolvableOddBelow33075);
    EXPECT_TRUE(note_mentions(v11025, "11025 = 3^2 5^2 7^2"));
    auto const v1764 = verdict_dimension(1764);
    EXPECT_EQ(v1764.kind, VerdictKind::Unknown);
    EXPECT_TRUE(note_mentions(v1764, "900"));
    // 2^2 3^2 5^2 7^2 is beyond both bounds
    EXPECT_EQ(verdict_dimension(44100).kind, VerdictKind::Unknown);
}

TEST(VerdictRing, Examples)
{
    auto const ising = verdict_ring(ring("ising"));
    EXPECT_EQ(ising.kind, VerdictKind::SolvableSinglePrime);
    EXPECT_EQ(ising.simple_dim_prime, 2u);

    auto const fib = verdict_ring(ring("fibonacci"));
    EXPECT_EQ(fib.kind, VerdictKind::Unknown);
    EXPECT_TRUE(note_mentions(fib, "FPdim"));

    auto const s3 = verdict_ring(ring("rep_s3"));
    EXPECT_EQ(s3.kind, VerdictKind::SolvableSinglePrime);
    EXPECT_EQ(s3.simple_dim_prime, 2u);
}

TEST(VerdictRing, PointedZ6IsSolvable)
{
    auto const v = verdict_ring(ring("z6"));
    EXPECT_EQ(v.kind, VerdictKind::SolvableSinglePrime);
    EXPECT_TRUE(v.pointed);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->value(), 6u);
}

TEST(ScanExceptions, Examples)
{
    EXPECT_EQ(scan_exceptions(1800, false), (std::vector<std::uint64_t>{900, 1764}));
    EXPECT_EQ(scan_exceptions(33075, true), (std::vector<std::uint64_t>{11025, 27225}));
    EXPECT_TRUE(scan_exceptions(100, false).empty());
}

TEST(ScanExceptions, CapIsEnforced)
{
    EXPECT_THROW(scan_exceptions(2000, false, 1000), CapExceeded);
}

TEST(ClaimedExceptions, Ranges)
{
    EXPECT_EQ(claimed_exceptions(1800, false), (std::vector<std::uint64_t>{900}));
    EXPECT_EQ(claimed_exceptions(33075, true), (std::vector<std::uint64_t>{11025}));
    EXPECT_EQ(claimed_exceptions(100, false), (std::vector<std::uint64_t>{}));
    EXPECT_FALSE(claimed_exceptions(5000, false));
}

// Properties

TEST(ClassifierProperties, WitnessesRecompose)
{
    for (std::uint64_t n = 1; n <= 20000; ++n) {
        for (auto const& f : {factor_pac(n), factor_paqbc(n)}) {
            if (!f)
                continue;
            ASSERT_EQ(f->value(), n);
            ASSERT_TRUE(is_square_free(f->c));
            if (f->p) {
                EXPECT_TRUE(is_prime(*f->p));
                EXPECT_NE(f->c % *f->p, 0u);
            }
            if (f->q) {
                ASSERT_TRUE(f->p);
                EXPECT_LT(*f->p, *f->q);
                EXPECT_NE(f->c % *f->q, 0u);
            }
        }
    }
}

TEST(ClassifierProperties, SingleImpliesTwoPrime)
{
    for (std::uint64_t n = 1; n <= 20000; ++n)
        if (factor_pac(n))
            ASSERT_TRUE(factor_paqbc(n)) << n;
}

TEST(ClassifierProperties, SquareFreeIsAllC)
{
    for (std::uint64_t n = 1; n <= 20000; ++n)
        if (is_square_free(n))
            ASSERT_EQ(factor_pac(n), fac(std::nullopt, 0, std::nullopt, 0, n)) << n;
}

TEST(ClassifierProperties, AgreesWithDivisorOracle)
{
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        bool const found = factor_paqbc(n).has_value();
        ASSERT_EQ(found, support::two_prime_form_oracle(n)) << n;
        ASSERT_EQ(found, has_two_prime_form_by_divisors(n)) << n;
    }
}

TEST(ClassifierProperties, ScanIsMonotone)
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        auto a = 1 + rng() % 60000, b = 1 + rng() % 60000;
        if (a > b)
            std::swap(a, b);
        for (bool odd : {false, true}) {
            auto const small = scan_exceptions(a, odd), large = scan_exceptions(b, odd);
            EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
        }
    }
}

TEST(ClassifierProperties, ScanMatchesPointwise)
{
    auto const list = scan_exceptions(5000, false);
    for (std::uint64_t n = 1; n < 5000; ++n)
        ASSERT_EQ(std::binary_search(list.begin(), list.end(), n), !factor_paqbc(n).has_value()) << n;
}
