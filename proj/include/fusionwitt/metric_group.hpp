#pragma once

// Finite abelian groups with quadratic forms valued in Q/Z.

#include "fusionwitt/abelian.hpp"
#include "fusionwitt/cyclotomic.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fusionwitt {

using Rational = boost::rational<std::int64_t>;

/// Representative in [0, 1).
Rational mod1(Rational r);

constexpr std::size_t default_element_cap = std::size_t{1} << 16;

class CapExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Z_{d_1} x ... x Z_{d_k}. Element ids enumerate coordinate tuples in
/// lexicographic order with the first coordinate most significant.
class FiniteAbelianGroup
{
public:
    using Element = std::vector<std::int64_t>;

    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<std::uint64_t> orders);

    std::vector<std::uint64_t> const& orders() const { return orders_; }
    std::size_t rank() const { return orders_.size(); }
    std::size_t size() const { return size_; }
    /// d_1 | d_2 | ... | d_k with every d_i >= 2.
    bool is_canonical() const;

    std::size_t encode(Element const& x) const;
    Element decode(std::size_t id) const;

    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t neg(std::size_t a) const;
    std::uint64_t order_of(std::size_t id) const;

    bool operator==(FiniteAbelianGroup const&) const = default;

private:
    std::vector<std::uint64_t> orders_;
    std::vector<std::size_t> stride_;
    std::size_t size_ = 1;
};

/// q(x) = sum_i x_i^2 diag_i + sum_{i<j} x_i x_j cross(i,j)  (mod 1).
/// Indices are 0-based.
struct QuadraticForm
{
    std::vector<Rational> diag;
    std::map<std::pair<int, int>, Rational> cross;

    Rational cross_at(int i, int j) const;
};

struct MetricCandidate
{
    std::vector<std::uint64_t> orders;
    QuadraticForm form;
};

struct MetricViolation
{
    std::string kind;
    std::vector<int> indices;
    std::string message;
};

struct MetricValidation
{
    std::vector<MetricViolation> violations;
    bool nondegenerate = false;
    bool valid() const { return violations.empty(); }
};

MetricValidation validate_metric(MetricCandidate const& raw, std::size_t cap = default_element_cap);

class InvalidMetric : public std::runtime_error
{
public:
    explicit InvalidMetric(std::vector<MetricViolation> violations);
    std::vector<MetricViolation> const& violations() const { return violations_; }

private:
    std::vector<MetricViolation> violations_;
};

class MetricGroup
{
public:
    using Element = FiniteAbelianGroup::Element;

    /// Trivial group.
    MetricGroup();
    /// Validates; throws InvalidMetric.
    explicit MetricGroup(MetricCandidate raw, std::size_t cap = default_element_cap);

    /// Well-defined form on a group whose orders need not be in divisibility
    /// order. Used for intermediate constructions.
    static MetricGroup ambient(std::vector<std::uint64_t> orders, QuadraticForm form,
                               std::size_t cap = default_element_cap);

    FiniteAbelianGroup const& group() const { return group_; }
    QuadraticForm const& form() const { return form_; }
    std::vector<std::uint64_t> const& orders() const { return group_.orders(); }
    std::size_t size() const { return group_.size(); }
    bool nondegenerate() const { return nondegenerate_; }
    /// Common denominator of every value of q and b.
    std::uint64_t level() const { return level_; }

    /// q(x) * level, reduced mod level.
    std::uint64_t q_scaled(std::size_t id) const;
    /// b(x, y) * level, reduced mod level.
    std::uint64_t b_scaled(std::size_t x, std::size_t y) const;

    Rational q(std::size_t id) const { return Rational(static_cast<std::int64_t>(q_scaled(id)), static_cast<std::int64_t>(level_)); }
    Rational q(Element const& x) const { return q(group_.encode(x)); }
    Rational b(std::size_t x, std::size_t y) const
    {
        return Rational(static_cast<std::int64_t>(b_scaled(x, y)), static_cast<std::int64_t>(level_));
    }

    // Group concept for abelian::decompose.
    std::size_t add(std::size_t a, std::size_t b) const { return group_.add(a, b); }
    std::size_t neg(std::size_t a) const { return group_.neg(a); }

    MetricCandidate to_candidate() const;

private:
    MetricGroup(FiniteAbelianGroup group, QuadraticForm form, std::size_t cap);

    FiniteAbelianGroup group_;
    QuadraticForm form_;
    std::uint64_t level_ = 1;
    std::vector<std::uint64_t> diag_scaled_;
    std::vector<std::vector<std::uint64_t>> cross_scaled_;
    bool nondegenerate_ = true;
};

/// Exact value of q at an element given by coordinates. Throws on
/// coordinates out of range.
Rational evaluate(MetricGroup const& mg, MetricGroup::Element const& x);
Rational bilinear(MetricGroup const& mg, MetricGroup::Element const& x, MetricGroup::Element const& y);

struct GaussSum
{
    CyclotomicInteger value;
    std::int64_t magnitude_squared = 0;
    /// Argument as k/8 of a full turn, when the sum is sqrt(m) * zeta_8^k.
    std::optional<int> eighths;
    bool exact = false;
};

GaussSum gauss_sum(MetricGroup const& mg, std::size_t cap = default_element_cap);

/// Orthogonal sum, refactored into invariant-factor form.
MetricGroup direct_sum(MetricGroup const& a, MetricGroup const& b, std::size_t cap = default_element_cap);

std::map<std::uint64_t, MetricGroup> sylow_decompose(MetricGroup const& mg, std::size_t cap = default_element_cap);

MetricGroup inverse_form(MetricGroup const& mg);

/// H/K with the induced form, in invariant-factor form. `in_h` masks a
/// subgroup H; K is generated by `killed`. The caller guarantees q is
/// constant on cosets of K inside H.
MetricGroup subquotient(MetricGroup const& mg, abelian::Mask const& in_h, std::vector<std::size_t> const& killed = {});

/// Invariant-factor form of mg.
MetricGroup canonicalize(MetricGroup const& mg);

} // namespace fusionwitt
