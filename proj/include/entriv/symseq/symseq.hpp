#pragma once

#include "entriv/rep/module.hpp"

#include <map>
#include <vector>

namespace entriv {

// Largest arity for which compose() materializes modules; characters are
// available up to kMaxSymmetricRank.
inline constexpr int kMaxMaterializedArity = 6;

// Arity-truncated symmetric sequence of graded Sigma_n-modules. There is no
// arity 0 component; zero-dimensional components are not stored.
class SymSeq {
public:
    SymSeq() = default;
    explicit SymSeq(int truncation);

    int truncation() const { return truncation_; }
    const std::map<int, std::map<int, SignedPermModule>>& components() const { return components_; }

    // Throws InvalidInput for arity outside 1..truncation or a module over the
    // wrong symmetric group.
    void set(int arity, int degree, SignedPermModule module);
    const SignedPermModule* find(int arity, int degree) const;
    std::size_t dim(int arity, int degree) const;
    bool has_arity(int arity) const;

    friend bool operator==(const SymSeq&, const SymSeq&) = default;

private:
    int truncation_ = 1;
    std::map<int, std::map<int, SignedPermModule>> components_;
};

// Z in arity 1, degree 0.
SymSeq unit_sequence(int truncation);

// Blocks ordered by their minimum, elements sorted.
using SetPartition = std::vector<std::vector<int>>;

struct PartitionOrbit {
    SetPartition representative; // first member in restricted-growth order
    std::vector<int> block_sizes; // weakly decreasing
    Integer stabilizer_order;
    Integer orbit_size;
};

// All set partitions of {0..n-1} in restricted-growth-string order.
std::vector<SetPartition> set_partitions(int n);
std::vector<PartitionOrbit> partition_orbits(int n);

// Sign picked up when tensor factors of the given degrees, listed in their
// current order, are moved so that factor j lands in position pi[j]: one
// (-1)^{d_j d_l} per inverted pair. Every Koszul sign in the composition
// product goes through here.
int koszul_sign(const std::vector<int>& degrees, const Permutation& pi);

// (A o B)(n) for 1 <= n <= truncation, materialized on the coset basis
// indexed by set partitions of {0..n-1}. Throws InvalidInput if truncation
// exceeds either input, LimitExceeded above kMaxMaterializedArity, and
// InvalidInput for non-monomial inputs.
SymSeq compose(const SymSeq& a, const SymSeq& b, int truncation);

// Characters of (A o B)(n) in every degree, computed by summing traces over
// the set partitions fixed by each class representative; nothing is
// materialized. Works for arbitrary (also non-monomial) inputs.
using GradedCharacters = std::map<int, std::map<int, CharacterVector>>; // arity -> degree -> character
GradedCharacters compose_characters(const SymSeq& a, const SymSeq& b, int truncation);
GradedCharacters characters(const SymSeq& s);

// dim (A o B)(n) in the given degree, summed over every set partition, and
// the same number computed orbit by orbit (orbit size times one summand).
Integer raw_dimension_sum(const SymSeq& a, const SymSeq& b, int n, int degree);
Integer orbit_dimension_sum(const SymSeq& a, const SymSeq& b, int n, int degree);

// Homology-level operadic suspension: (n, d) -> (n, d + k(n-1)), tensored
// with sign^k.
SymSeq suspend(const SymSeq& a, int k);

struct FreePieceEntry {
    int degree = 0;
    Integer dimension;
    friend bool operator==(const FreePieceEntry&, const FreePieceEntry&) = default;
};

// Rational homology of (A(n) (x) X^{(x)n})_{h Sigma_n} for X one generator in
// degree d: per internal degree e of A(n), the trivial multiplicity of
// A(n)_e (x) sign^d, reported in degree e + n d. Throws if A(n) is absent.
std::vector<FreePieceEntry> free_piece_rational(const SymSeq& a, int generator_degree, int arity);

struct MonoidalityEntry {
    int arity = 0;
    int degree = 0;
    std::size_t lhs_dim = 0;
    std::size_t rhs_dim = 0;
    bool characters_match = false;
    bool pass = false;
};

struct MonoidalityReport {
    int truncation = 0;
    std::vector<MonoidalityEntry> entries;
    bool pass = false;
};

// Compares suspend(compose(A, B), 1) with compose(suspend(A, 1), suspend(B, 1)).
MonoidalityReport monoidality_report(const SymSeq& a, const SymSeq& b, int truncation);

nlohmann::json to_json_value(const SymSeq& s);
SymSeq symseq_from_json(const nlohmann::json& j);
nlohmann::json to_json_value(const MonoidalityReport& r);
nlohmann::json to_json_value(const GradedCharacters& c);
// Degreewise dimensions, {"arity": {"degree": dim}}.
nlohmann::json dimension_table(const SymSeq& s);

} // namespace entriv
