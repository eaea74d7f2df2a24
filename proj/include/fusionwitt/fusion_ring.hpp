#pragma once

// Fusion rings (based rings with a duality involution) and the invariants
// computed from their structure constants alone.

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace fusionwitt {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Unvalidated ring data as read from a file or built in code.
/// coeff is row-major rank^3 with coeff[(i*rank + j)*rank + k] = N_{ij}^k.
struct RingCandidate
{
    int rank = 0;
    std::vector<std::string> labels;
    std::vector<int> dual;
    std::vector<std::int64_t> coeff;
};

enum class ViolationKind
{
    Malformed,
    NegativeCoefficient,
    Duality,
    Unit,
    Rigidity,
    Commutativity,
    Associativity,
};

std::string to_string(ViolationKind kind);

struct Violation
{
    ViolationKind kind;
    std::vector<int> indices;
    std::string message;
};

/// Every violated fusion-ring axiom, in a fixed order. Empty means valid.
std::vector<Violation> validate_ring(RingCandidate const& raw);

class InvalidRing : public std::runtime_error
{
public:
    explicit InvalidRing(std::vector<Violation> violations);
    std::vector<Violation> const& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

class FusionRing
{
public:
    /// Validates and throws InvalidRing on failure. With `force`, only
    /// structural problems (arity, ranges) are fatal.
    explicit FusionRing(RingCandidate raw, bool force = false);

    int rank() const { return rank_; }
    std::int64_t N(int i, int j, int k) const { return coeff_[(static_cast<std::size_t>(i) * rank_ + j) * rank_ + k]; }
    int dual(int i) const { return dual_[i]; }
    std::string const& label(int i) const { return labels_[i]; }
    std::vector<std::string> const& labels() const { return labels_; }
    int index_of(std::string const& label) const;

    /// (N_i)_{jk} = N_{ij}^k
    IntMatrix left_matrix(int i) const;

    /// Simples k with N_{ij}^k > 0.
    std::vector<int> constituents(int i, int j) const;

    RingCandidate const& data() const { return raw_; }

private:
    RingCandidate raw_;
    int rank_;
    std::vector<std::string> labels_;
    std::vector<int> dual_;
    std::vector<std::int64_t> coeff_;
};

/// Sorted member set of a fusion subring.
struct Subring
{
    std::vector<int> members;
    bool operator==(Subring const&) const = default;
    bool contains(int i) const;
};

struct InvertibleGroup
{
    std::vector<int> members;                     // sorted simple indices, members[0] == 0
    std::vector<std::vector<std::size_t>> table;  // positions into members
    std::vector<std::uint64_t> invariant_factors;
};

struct GradingData
{
    std::vector<std::vector<int>> components;  // ordered by smallest member
    std::size_t neutral = 0;
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::uint64_t> invariant_factors;
    std::string group_name;
};

struct NilpotencyResult
{
    bool nilpotent = false;
    std::vector<Subring> tower;
};

struct TensorSquare
{
    std::map<int, std::int64_t> invertible;      // g -> N_{x,x*}^g for invertible g
    std::map<int, std::int64_t> non_invertible;  // y -> N_{x,x*}^y, nonzero entries only
};

/// Raised when a candidate that slipped validation breaks a structural
/// identity every fusion ring satisfies.
class RingConsistencyError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

InvertibleGroup invertibles(FusionRing const& ring);

/// G[x]: invertibles g with g (x) x = x. Sorted simple indices.
std::vector<int> stabilizer(FusionRing const& ring, int x);

TensorSquare tensor_square_check(FusionRing const& ring, int x);

Subring subring_generated(FusionRing const& ring, std::vector<int> const& seed);
Subring adjoint_subring(FusionRing const& ring);
/// Adjoint of a fusion subring: generated by constituents of x (x) x* for x in `sub`.
Subring adjoint_of(FusionRing const& ring, Subring const& sub);

GradingData universal_grading(FusionRing const& ring);

NilpotencyResult nilpotency(FusionRing const& ring, int max_depth = 64);

/// "Z_2 x Z_4", or "trivial" for no factors.
std::string group_name(std::vector<std::uint64_t> const& invariant_factors);

} // namespace fusionwitt
