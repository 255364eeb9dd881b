#pragma once

#include "entriv/core/rational_matrix.hpp"
#include "entriv/rep/symmetric_group.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace entriv {

struct SignedIndex {
    std::size_t index = 0;
    int sign = 1;
    friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

// basis index i |-> sign * e_index
using SignedPermutation = std::vector<SignedIndex>;

// Class function on Sigma_n, keyed by cycle type.
struct CharacterVector {
    int n = 0;
    std::map<Partition, Rational> values;
    friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

// A representation of Sigma_n given by the images of the adjacent
// transpositions s_0, ..., s_{n-2}. Monomial modules store signed
// permutations; others store rational matrices acting on column vectors.
class SignedPermModule {
public:
    SignedPermModule() = default;

    // Both constructors verify involution, braid and commutation relations
    // and throw InvalidInput on failure.
    static SignedPermModule monomial(int n, std::size_t dim, std::vector<SignedPermutation> generators);
    // Detects monomial matrices and stores them as such.
    static SignedPermModule from_matrices(int n, std::size_t dim, std::vector<QMatrix> generators);

    static SignedPermModule trivial(int n, std::size_t dim = 1);
    static SignedPermModule sign_rep(int n);
    // Basis = all_permutations(n), action by left multiplication.
    static SignedPermModule regular(int n);
    // Basis = distinct arrangements of the given letters (a multiset), Sigma_n
    // permuting positions; optionally tensored with the sign.
    static SignedPermModule words(const std::vector<int>& letters, bool sign_twisted = false);
    // Basis {0..n-1} with the defining action.
    static SignedPermModule standard_permutation(int n);
    static SignedPermModule zero(int n);

    int n() const { return n_; }
    std::size_t dim() const { return dim_; }
    bool is_monomial() const { return monomial_; }

    const std::vector<SignedPermutation>& signed_generators() const;
    // Matrix of s_i; available for every module.
    QMatrix generator_matrix(int i) const;

    // Action of an arbitrary group element. act() requires a monomial module.
    SignedPermutation act(const Permutation& g) const;
    QMatrix matrix(const Permutation& g) const;
    Rational trace(const Permutation& g) const;

    // Tensor with the k-th power of the sign representation.
    SignedPermModule sign_twist(int k) const;

    friend bool operator==(const SignedPermModule&, const SignedPermModule&) = default;

private:
    void validate() const;

    int n_ = 1;
    std::size_t dim_ = 0;
    bool monomial_ = true;
    std::vector<SignedPermutation> signed_;
    std::vector<QMatrix> matrices_;
};

SignedPermModule direct_sum(const SignedPermModule& a, const SignedPermModule& b);
// Monomial tensor product; basis pairs (i, j) ordered as i * dim(b) + j.
SignedPermModule tensor(const SignedPermModule& a, const SignedPermModule& b);

CharacterVector character(const SignedPermModule& m);
CharacterVector permutation_character(int n);
CharacterVector operator+(const CharacterVector& a, const CharacterVector& b);

// <chi_m, 1> computed exactly; throws Error if the result is not integral.
Integer trivial_multiplicity(const SignedPermModule& m);
Integer trivial_multiplicity(const CharacterVector& chi);

// True iff every basis line has trivial stabilizer. Throws InvalidInput for
// matrix-valued modules.
bool is_sigma_free(const SignedPermModule& m);

// The (t-1)-dimensional quotient of the permutation module Q^t by the diagonal,
// on the images e_0..e_{t-2} of the first t-1 standard vectors.
SignedPermModule rho(int t);
// rho(t)(g) written down directly from g, bypassing generator products.
QMatrix rho_matrix(int t, const Permutation& g);

nlohmann::json to_json_value(const SignedPermModule& m);
SignedPermModule signed_perm_module_from_json(const nlohmann::json& j);
nlohmann::json to_json_value(const CharacterVector& chi);
std::string partition_label(const Partition& lambda);

} // namespace entriv
