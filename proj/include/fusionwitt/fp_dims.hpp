#pragma once

#include "fusionwitt/fusion_ring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace fusionwitt {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of det(xI - A), highest degree first (leading 1).
/// Division-free (Berkowitz), so exact for any integral Scalar.
template <typename Scalar, typename Derived>
std::vector<Scalar> characteristic_polynomial(Eigen::MatrixBase<Derived> const& a)
{
    auto const n = a.rows();
    if (n != a.cols())
        throw std::invalid_argument("characteristic_polynomial: matrix is not square");
    if (n == 0)
        return {Scalar(1)};
    auto at = [&](Eigen::Index i, Eigen::Index j) { return Scalar(a(i, j)); };

    std::vector<Scalar> poly{Scalar(1), -at(0, 0)};
    for (Eigen::Index r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
        std::vector<Scalar> col(r), next(r);
        for (Eigen::Index i = 0; i < r; ++i)
            col[i] = at(i, r);
        std::vector<Scalar> t{Scalar(1), -at(r, r)};
        for (Eigen::Index step = 0; step < r; ++step) {
            Scalar dot = 0;
            for (Eigen::Index j = 0; j < r; ++j)
                dot += at(r, j) * col[j];
            t.push_back(-dot);
            for (Eigen::Index i = 0; i < r; ++i) {
                Scalar s = 0;
                for (Eigen::Index j = 0; j < r; ++j)
                    s += at(i, j) * col[j];
                next[i] = s;
            }
            std::swap(col, next);
        }
        std::vector<Scalar> out(poly.size() + 1, Scalar(0));
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j <= i && j < poly.size(); ++j)
                out[i] += t[i - j] * poly[j];
        poly = std::move(out);
    }
    return poly;
}

/// Evaluates a polynomial (highest degree first) by Horner's rule.
template <typename Scalar>
Scalar evaluate_polynomial(std::vector<Scalar> const& coeffs, Scalar const& x)
{
    Scalar acc = 0;
    for (auto const& c : coeffs)
        acc = acc * x + c;
    return acc;
}

/// True when sqrt(s) is a root of the integer polynomial.
bool shares_root_with_sqrt(std::vector<BigInt> const& poly, std::uint64_t s);

struct FPDimData
{
    std::vector<long double> dims;
    long double error_bound = 0;
    std::vector<std::optional<std::uint64_t>> exact_square;
    long double total = 0;
    std::optional<std::uint64_t> total_exact;
    bool integral = false;
    bool weakly_integral = false;
};

class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class CertificationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

constexpr double default_tolerance = 1e-12;

/// Perron eigenvalue of a nonnegative matrix by shifted power iteration.
long double perron_eigenvalue(IntMatrix const& m, long double tolerance, long double* residual = nullptr,
                              int max_iterations = 1'000'000);

FPDimData fp_dim_data(FusionRing const& ring, double tolerance = default_tolerance);

struct PrimePowerResult
{
    bool pointed = false;
    std::optional<std::uint64_t> prime;
};

/// The prime p with every (FPdim X)^2 a power of p. `pointed` is set, with
/// no prime, when all dimensions are 1. Throws when certificates are missing.
PrimePowerResult simple_dims_prime_power(FusionRing const& ring, FPDimData const& data);

} // namespace fusionwitt
