#include "fusionwitt/fp_dims.hpp"

#include "fusionwitt/number_theory.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace fusionwitt {

bool shares_root_with_sqrt(std::vector<BigInt> const& poly, std::uint64_t s)
{
    if (auto r = exact_isqrt(s); r >= 0)
        return evaluate_polynomial(poly, BigInt(r)) == 0;
    // x^2 - s is irreducible: reduce with x^2 = s and require a zero remainder.
    BigInt even = 0, odd = 0, power = 1;
    auto const degree = poly.size() - 1;
    for (std::size_t e = 0; e <= degree; ++e) {
        auto const& c = poly[degree - e];
        if (e % 2 == 0)
            even += c * power;
        else {
            odd += c * power;
            power *= s;
        }
    }
    return even == 0 && odd == 0;
}

long double perron_eigenvalue(IntMatrix const& m, long double tolerance, long double* residual, int max_iterations)
{
    using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
    using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
    auto const n = m.rows();
    Mat shifted = m.cast<long double>() + Mat::Identity(n, n);
    Vec v = Vec::Ones(n).normalized();
    long double previous = -1;
    for (int it = 0; it < max_iterations; ++it) {
        Vec w = shifted * v;
        long double const rayleigh = v.dot(w);
        if (std::fabs(rayleigh - previous) < tolerance / 10) {
            if (residual)
                *residual = (w - rayleigh * v).norm();
            return rayleigh - 1;
        }
        previous = rayleigh;
        long double const norm = w.norm();
        if (!(norm > 0) || !std::isfinite(norm))
            throw ConvergenceError("power iteration degenerated");
        v = w / norm;
    }
    throw ConvergenceError("power iteration did not converge within " + std::to_string(max_iterations) + " steps");
}

FPDimData fp_dim_data(FusionRing const& ring, double tolerance)
{
    if (!(tolerance > 0))
        throw std::invalid_argument("tolerance must be positive");
    FPDimData out;
    int const r = ring.rank();
    out.dims.resize(r);
    out.exact_square.resize(r);
    bool all_certified = true, all_integers = true;
    for (int i = 0; i < r; ++i) {
        auto const m = ring.left_matrix(i);
        long double residual = 0;
        long double const d = perron_eigenvalue(m, tolerance, &residual);
        out.dims[i] = d;
        out.error_bound = std::max({out.error_bound, residual, static_cast<long double>(tolerance)});

        auto const s = static_cast<std::uint64_t>(std::llround(d * d));
        long double const root = std::sqrt(static_cast<long double>(s));
        if (std::fabs(d - root) < tolerance) {
            if (!shares_root_with_sqrt(characteristic_polynomial<BigInt>(m), s)) {
                std::ostringstream os;
                os << "FPdim(" << ring.label(i) << ") is within tolerance of sqrt(" << s
                   << ") but the exact check fails; tighten the tolerance";
                throw CertificationError(os.str());
            }
            out.exact_square[i] = s;
            all_integers = all_integers && exact_isqrt(s) >= 0;
        } else {
            all_certified = false;
            all_integers = false;
        }
        out.total += d * d;
    }
    if (all_certified) {
        std::uint64_t total = 0;
        for (auto const& s : out.exact_square)
            total += *s;
        out.total_exact = total;
    }
    out.weakly_integral = out.total_exact.has_value();
    out.integral = out.weakly_integral && all_integers;
    return out;
}

PrimePowerResult simple_dims_prime_power(FusionRing const& ring, FPDimData const& data)
{
    if (!data.weakly_integral)
        throw std::invalid_argument("prime-power check requires a weakly integral ring");
    std::set<std::uint64_t> primes;
    for (int i = 0; i < ring.rank(); ++i) {
        if (!data.exact_square[i])
            throw std::invalid_argument("missing exact certificate for " + ring.label(i));
        for (auto const& [p, e] : factorize(*data.exact_square[i]))
            primes.insert(p);
    }
    PrimePowerResult out;
    if (primes.empty())
        out.pointed = true;
    else if (primes.size() == 1)
        out.prime = *primes.begin();
    return out;
}

} // namespace fusionwitt
