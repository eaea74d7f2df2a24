#include "support.hpp"

#include "fusionwitt/fp_dims.hpp"

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include <cmath>

using namespace fusionwitt;
using support::ring;

namespace {

double eigen_perron(IntMatrix const& m)
{
    Eigen::EigenSolver<Eigen::MatrixXd> es(m.cast<double>(), false);
    double best = 0;
    for (auto const& ev : es.eigenvalues())
        best = std::max(best, ev.real());
    return best;
}

} // namespace

TEST(FPDims, Ising)
{
    auto const d = fp_dim_data(ring("ising"), 1e-12);
    EXPECT_NEAR(static_cast<double>(d.dims[0]), 1.0, 1e-9);
    EXPECT_NEAR(static_cast<double>(d.dims[1]), 1.0, 1e-9);
    EXPECT_NEAR(static_cast<double>(d.dims[2]), std::sqrt(2.0), 1e-9);
    ASSERT_TRUE(d.exact_square[2]);
    EXPECT_EQ(*d.exact_square[0], 1u);
    EXPECT_EQ(*d.exact_square[1], 1u);
    EXPECT_EQ(*d.exact_square[2], 2u);
    ASSERT_TRUE(d.total_exact);
    EXPECT_EQ(*d.total_exact, 4u);
    EXPECT_FALSE(d.integral);
    EXPECT_TRUE(d.weakly_integral);
}

TEST(FPDims, RankOne)
{
    auto const d = fp_dim_data(ring("trivial"));
    ASSERT_EQ(d.dims.size(), 1u);
    EXPECT_NEAR(static_cast<double>(d.total), 1.0, 1e-12);
    EXPECT_EQ(d.total_exact, 1u);
    EXPECT_TRUE(d.integral);
}

TEST(FPDims, FibonacciIsNotWeaklyIntegral)
{
    auto const d = fp_dim_data(ring("fibonacci"), 1e-12);
    EXPECT_NEAR(static_cast<double>(d.dims[1]), (1 + std::sqrt(5.0)) / 2, 1e-9);
    EXPECT_FALSE(d.exact_square[1]);
    EXPECT_FALSE(d.weakly_integral);
    EXPECT_FALSE(d.integral);
}

TEST(FPDims, RepS3AndA4AreIntegral)
{
    auto const s3 = fp_dim_data(ring("rep_s3"));
    EXPECT_TRUE(s3.integral);
    EXPECT_EQ(s3.total_exact, 6u);
    auto const a4 = fp_dim_data(ring("rep_a4"));
    EXPECT_TRUE(a4.integral);
    EXPECT_EQ(a4.total_exact, 12u);
    EXPECT_EQ(*a4.exact_square[3], 9u);
}

TEST(FPDims, RejectsNonPositiveTolerance)
{
    EXPECT_THROW(fp_dim_data(ring("ising"), 0.0), std::invalid_argument);
}

TEST(FPDims, PrimePowerExamples)
{
    auto check = [](std::string const& name) {
        auto const r = ring(name);
        return simple_dims_prime_power(r, fp_dim_data(r));
    };
    EXPECT_EQ(check("ising").prime, 2u);
    EXPECT_EQ(check("rep_s3").prime, 2u);
    EXPECT_EQ(check("rep_a4").prime, 3u);
    auto const z4 = check("z4");
    EXPECT_TRUE(z4.pointed);
    EXPECT_FALSE(z4.prime);
    EXPECT_THROW(simple_dims_prime_power(ring("fibonacci"), fp_dim_data(ring("fibonacci"))), std::invalid_argument);
}

TEST(FPDims, CharacteristicPolynomialMatchesDeterminantOracle)
{
    for (auto const& [name, r] : support::ring_corpus())
        for (int i = 0; i < r.rank(); ++i) {
            auto const m = r.left_matrix(i);
            auto const poly = characteristic_polynomial<BigInt>(m);
            ASSERT_EQ(poly.size(), static_cast<std::size_t>(r.rank()) + 1);
            for (std::int64_t t = -3; t <= 3; ++t)
                EXPECT_EQ(evaluate_polynomial(poly, BigInt(t)), support::char_poly_at(m, t)) << name << " " << i;
        }
}

TEST(FPDims, CharacteristicPolynomialOnRandomIntegerMatrices)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int const n = 1 + static_cast<int>(rng() % 6);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = static_cast<std::int64_t>(rng() % 11) - 5;
        auto const poly = characteristic_polynomial<BigInt>(m);
        for (std::int64_t t = -4; t <= 4; ++t)
            EXPECT_EQ(evaluate_polynomial(poly, BigInt(t)), support::char_poly_at(m, t));
    }
}

TEST(FPDims, SqrtRootCertificate)
{
    // x^2 - 2 divides x^3 - x^2 - 2x + 2 = (x - 1)(x^2 - 2)
    std::vector<BigInt> p{1, -1, -2, 2};
    EXPECT_TRUE(shares_root_with_sqrt(p, 2));
    EXPECT_TRUE(shares_root_with_sqrt(p, 1));
    EXPECT_FALSE(shares_root_with_sqrt(p, 3));
    EXPECT_FALSE(shares_root_with_sqrt(p, 4));
}

namespace {

std::vector<FusionRing> property_rings()
{
    std::vector<FusionRing> out;
    auto const base = support::ring_corpus();
    for (auto const& [name, r] : base)
        out.push_back(r);
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 8; ++t) {
        auto const& a = base[rng() % base.size()].second;
        auto const& b = base[rng() % base.size()].second;
        if (a.rank() * b.rank() <= 24)
            out.emplace_back(support::ring_product(a.data(), b.data()));
    }
    return out;
}

} // namespace

TEST(FPDimsProperties, AgreeWithDenseEigensolver)
{
    for (auto const& r : property_rings()) {
        auto const d = fp_dim_data(r);
        for (int i = 0; i < r.rank(); ++i)
            EXPECT_NEAR(static_cast<double>(d.dims[i]), eigen_perron(r.left_matrix(i)), 1e-9);
    }
}

TEST(FPDimsProperties, HomomorphismIdentityAndTotal)
{
    for (auto const& r : property_rings()) {
        auto const d = fp_dim_data(r);
        long double total = 0;
        for (int i = 0; i < r.rank(); ++i) {
            total += d.dims[i] * d.dims[i];
            EXPECT_GE(d.dims[i], 1 - 1e-12L);
            for (int j = 0; j < r.rank(); ++j) {
                long double rhs = 0;
                for (int k = 0; k < r.rank(); ++k)
                    rhs += r.N(i, j, k) * d.dims[k];
                EXPECT_NEAR(static_cast<double>(d.dims[i] * d.dims[j]), static_cast<double>(rhs), 1e-9);
            }
        }
        EXPECT_NEAR(static_cast<double>(total), static_cast<double>(d.total), 1e-9);
        EXPECT_NEAR(static_cast<double>(d.dims[0]), 1.0, 1e-12);
    }
}

TEST(FPDimsProperties, DualsShareCertificatesAndStabilizersDivide)
{
    for (auto const& r : property_rings()) {
        auto const d = fp_dim_data(r);
        for (int i = 0; i < r.rank(); ++i) {
            EXPECT_EQ(d.exact_square[i], d.exact_square[r.dual(i)]);
            if (d.exact_square[i])
                EXPECT_EQ(*d.exact_square[i] % stabilizer(r, i).size(), 0u);
        }
        if (d.weakly_integral)
            for (auto const& s : d.exact_square)
                EXPECT_TRUE(s.has_value());
    }
}
