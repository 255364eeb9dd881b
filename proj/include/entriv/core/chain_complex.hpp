#pragma once

#include "entriv/core/graded_group.hpp"
#include "entriv/core/int_matrix.hpp"
#include "entriv/util/rng.hpp"

#include <cstdint>
#include <map>

namespace entriv {

// Coefficients for homology: the integers or a prime field.
struct Coefficients {
    enum class Kind { Integers, PrimeField };
    Kind kind = Kind::Integers;
    std::uint32_t prime = 0;

    static Coefficients integers() { return {}; }
    static Coefficients field(std::uint32_t p);
    friend bool operator==(const Coefficients&, const Coefficients&) = default;
};

// Homologically graded complex of free Z-modules. d_n : C_n -> C_{n-1} is a
// rank(n-1) x rank(n) matrix acting on column vectors; a missing differential
// is the zero map.
class ChainComplex {
public:
    ChainComplex() = default;
    // Throws InvalidInput if a differential has the wrong shape.
    ChainComplex(std::map<int, std::size_t> ranks, std::map<int, IntMatrix> differentials);

    std::size_t rank(int degree) const;
    const std::map<int, std::size_t>& ranks() const { return ranks_; }
    const std::map<int, IntMatrix>& differentials() const { return differentials_; }
    // d_n, materialized as a zero matrix when absent.
    IntMatrix differential(int degree) const;

    // True iff d_n o d_{n+1} == 0 for every consecutive pair.
    bool squares_to_zero() const;

private:
    std::map<int, std::size_t> ranks_;
    std::map<int, IntMatrix> differentials_;
};

// H_n = ker d_n / im d_{n+1}. Over Z via Smith normal form, over F_p via
// ranks mod p. Throws InvalidInput if d o d != 0.
GradedAbelianGroup homology(const ChainComplex& c, Coefficients coefficients = Coefficients::integers());

struct FormalitySplitting {
    ChainComplex minimal;
    bool certified = false;
};

// Builds the minimal model: Z^{free rank of H_n} in degree n with zero
// differential, plus one Z --d--> Z in degrees (n+1, n) per torsion order d of
// H_n. Certified iff its homology equals that of the input.
FormalitySplitting formality_splitting(const ChainComplex& c);

// Complex in degrees 0..top with ranks in 1..max_rank and entries in
// [-bound, bound]. Each d_n for n >= 2 has columns that are small multiples of
// combinations of a kernel basis of d_{n-1}, so d o d = 0 by construction.
ChainComplex random_chain_complex(Rng& rng, int top, std::size_t max_rank, long bound);

nlohmann::json to_json_value(const ChainComplex& c);
ChainComplex chain_complex_from_json(const nlohmann::json& j);

} // namespace entriv
