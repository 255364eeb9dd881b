#pragma once

#include "entriv/core/chain_complex.hpp"
#include "entriv/core/modp.hpp"
#include "entriv/core/smith.hpp"

#include <string>

namespace entriv {

// C(j, k) mod 2 for any integer j and k >= 0, using the 2-adic extension
// (C(-1, k) = 1 for all k).
bool binomial_mod2(long j, long k);

// Sq^k on the mod-2 cohomology of RP_a^b, x^j |-> C(j, k) x^{j+k}. Rows are
// indexed by target cell j+k-a, columns by source cell j-a.
Gf2Matrix stunted_sq(int a, int b, int k);

// Cellular chains of RP_a^b: one cell per degree, d(e_j) = 2 e_{j-1} for
// even j and 0 for odd j (j > a).
ChainComplex stunted_cell_complex(int a, int b);
GradedAbelianGroup stunted_integral_homology(int a, int b);

// 0 -> Z --(p, theta)--> Z + Z/p^k -> Z/p^{k+1} -> 0 with k = (n-2)/2 for even
// n and (n-1)/2 for odd n, theta normalized to 1 in Z/p^k.
struct ExactTriple {
    unsigned p = 0;
    int n = 0;
    int k = 0;
    Integer theta_bar;           // in Z/p^k
    Integer middle_torsion;      // p^k
    Integer right_order;         // p^{k+1}
    IntMatrix presentation;      // columns: image of 1, torsion relation
    SmithForm certificate;
    bool injective = false;
    AbelianGroup cokernel;
    bool pass = false;
};

int ku_exponent(int n);
// Throws InvalidInput for n < 2 or p not prime.
ExactTriple ku_ses(unsigned p, int n);

enum class WitnessCase { Vacuous, Nishida, K1Detection };

struct NilpotenceWitness {
    bool detected_non_nilpotent = false;
    WitnessCase which = WitnessCase::Vacuous;
    int k = 0;
    std::string reason;
};

// n = 1 is accepted and reported as vacuous.
NilpotenceWitness nilpotence_witness(unsigned p, int n);

// Eigenvalue of theta on beta^n: (p^n - 0) / p, exact.
Integer adams_theta(int n, unsigned p);

struct UnitRelation {
    unsigned p = 0;
    int n = 0;
    bool has_f_term = false;
    bool f_domain_contractible = false;
    bool f_domain_coconnected = false;
    int f_domain_top_degree = 0; // meaningful when not contractible
    bool theta_smash_nilpotent = false;
    bool theta_detected = false;
    std::string relation;
};

UnitRelation unit_relation(unsigned p, int n);

std::string witness_case_name(WitnessCase c);
nlohmann::json to_json_value(const ExactTriple& t);
nlohmann::json to_json_value(const NilpotenceWitness& w);
nlohmann::json to_json_value(const UnitRelation& u);
nlohmann::json gf2_to_json(const Gf2Matrix& m);

void require_prime(unsigned p);

} // namespace entriv
