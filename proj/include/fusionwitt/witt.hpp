#pragma once

// Witt classes of metric groups via isotropic reduction, and formal words in
// the pointed classes together with the cyclic Ising factor.

#include "fusionwitt/metric_group.hpp"

#include <map>
#include <optional>
#include <random>
#include <vector>

namespace fusionwitt {

/// Nonzero x with q(x) = 0, ascending element id (lexicographic order).
std::vector<std::size_t> isotropic_elements(MetricGroup const& mg, std::size_t cap = default_element_cap);

/// x^perp / <x> with the induced form. Throws std::invalid_argument if x is
/// zero or not isotropic.
MetricGroup reduce_once(MetricGroup const& mg, std::size_t x);

struct ReductionStep
{
    std::uint64_t prime = 0;
    std::uint64_t order_before = 0;
    MetricGroup::Element isotropic;
    std::uint64_t order_after = 0;
};

/// Fully reduces a metric group. `chooser` picks the isotropic element;
/// nullptr picks the lexicographically smallest.
MetricGroup reduce_to_anisotropic(MetricGroup const& mg, std::mt19937_64* chooser = nullptr,
                                  std::vector<ReductionStep>* trace = nullptr, std::uint64_t prime = 0,
                                  std::size_t cap = default_element_cap);

/// Exhaustive search for an isomorphism carrying q_a to q_b.
bool metric_iso(MetricGroup const& a, MetricGroup const& b, std::size_t cap = default_element_cap);

/// Prime -> nontrivial anisotropic p-group representative. Empty is the identity.
struct PointedWittClass
{
    std::map<std::uint64_t, MetricGroup> parts;
    bool is_identity() const { return parts.empty(); }
};

struct WittClassReport
{
    PointedWittClass cls;
    std::vector<ReductionStep> trace;
    /// Per prime: Gauss sum of the Sylow part and of its representative.
    std::map<std::uint64_t, std::pair<GaussSum, GaussSum>> gauss;
};

PointedWittClass pointed_witt_class(MetricGroup const& mg, std::size_t cap = default_element_cap);
WittClassReport pointed_witt_class_report(MetricGroup const& mg, std::size_t cap = default_element_cap);

bool same_class(PointedWittClass const& a, PointedWittClass const& b, std::size_t cap = default_element_cap);
PointedWittClass class_multiply(PointedWittClass const& a, PointedWittClass const& b,
                                std::size_t cap = default_element_cap);
PointedWittClass class_inverse(PointedWittClass const& c);

constexpr int default_order_cap = 32;
constexpr std::size_t default_closure_cap = 256;

/// Least n with c^n trivial, or nullopt when n would exceed `cap`.
std::optional<int> class_order(PointedWittClass const& c, int cap = default_order_cap,
                               std::size_t element_cap = default_element_cap);

struct GeneratedSubgroup
{
    std::vector<PointedWittClass> elements;  // elements[0] is the identity
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::uint64_t> invariant_factors;
    std::uint64_t order() const { return elements.size(); }
    std::uint64_t exponent() const;
};

GeneratedSubgroup generated_subgroup(std::vector<PointedWittClass> const& gens, std::size_t cap = default_closure_cap,
                                     std::size_t element_cap = default_element_cap);

/// Formal element of the pointed classes times the cyclic group of order 16
/// generated by the Ising class. Equality of words is sufficient, but not
/// known to be necessary, for equality of the underlying classes.
struct WittWord
{
    PointedWittClass pointed;
    int ising_exponent = 0;  // in [0, 16)
};

/// Word of an Ising braided category whose class is the m-th power of the
/// generator. Throws unless m is odd.
WittWord ising_word(int m);
WittWord pointed_word(PointedWittClass c);

WittWord word_compose(WittWord const& u, WittWord const& v, std::size_t cap = default_element_cap);
WittWord word_inverse(WittWord const& u);
bool word_equal(WittWord const& u, WittWord const& v, std::size_t cap = default_element_cap);
std::optional<int> word_order(WittWord const& u, int cap = default_order_cap, std::size_t element_cap = default_element_cap);

} // namespace fusionwitt
