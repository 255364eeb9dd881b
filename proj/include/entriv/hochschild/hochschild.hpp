#pragma once

#include "entriv/core/chain_complex.hpp"
#include "entriv/core/graded_group.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace entriv {

// Z, Q or F_p. Structure constants are always integers; over F_p they are
// reduced, over Q homology is taken over Z and only free ranks are kept.
struct BaseRing {
    enum class Kind { Integers, Rationals, PrimeField };
    Kind kind = Kind::Integers;
    std::uint32_t prime = 0;

    static BaseRing integers() { return {}; }
    static BaseRing rationals() { return {Kind::Rationals, 0}; }
    static BaseRing field(std::uint32_t p);
    // "Z", "Q", "F2", "F3", ...
    static BaseRing parse(const std::string& name);
    std::string name() const;
    friend bool operator==(const BaseRing&, const BaseRing&) = default;
};

using LinearCombination = std::vector<std::pair<std::size_t, Integer>>;

// Finite free graded algebra with basis e_0 = 1, e_1, ..., e_{d-1}. The
// constructor checks the unit, homogeneity, associativity and graded
// commutativity e_i e_j = (-1)^{|i||j|} e_j e_i.
class GradedUnitalAlgebra {
public:
    GradedUnitalAlgebra(BaseRing ring, std::vector<std::string> names, std::vector<int> degrees,
                        std::map<std::pair<std::size_t, std::size_t>, LinearCombination> products);

    const BaseRing& ring() const { return ring_; }
    std::size_t dim() const { return degrees_.size(); }
    int degree(std::size_t i) const { return degrees_.at(i); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    // Missing products are zero. Terms are sorted by basis index, coefficients nonzero.
    const LinearCombination& multiply(std::size_t i, std::size_t j) const;
    // Free rank of each internal degree.
    std::map<int, std::size_t> degree_ranks() const;

private:
    BaseRing ring_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<std::vector<LinearCombination>> table_;
};

// R[x]/x^2 with |x| = -n.
GradedUnitalAlgebra square_zero_extension(BaseRing ring, int n);
GradedUnitalAlgebra ground_ring(BaseRing ring);

// Keyed by (Hochschild degree s, internal degree t). Zero groups are not stored.
struct BigradedGroup {
    std::map<std::pair<int, int>, AbelianGroup> groups;

    void set(int s, int t, AbelianGroup g);
    AbelianGroup at(int s, int t) const;
    friend bool operator==(const BigradedGroup&, const BigradedGroup&) = default;
};

inline constexpr std::size_t kMaxBarBasis = std::size_t{1} << 20;

// Normalized Hochschild complex A (x) Abar^{(x)s} with
// b = sum_{i<s} (-1)^i d_i + (-1)^{s + |a_s|(|a_0|+...+|a_{s-1}|)} d_s.
// Returns the complex of internal degree t for every t that occurs, graded by s
// in 0..smax+1.
std::map<int, ChainComplex> bar_complexes(const GradedUnitalAlgebra& a, int smax);
BigradedGroup bar_hochschild(const GradedUnitalAlgebra& a, int smax);

// Two-periodic resolution of R[x]/x^2 (|x| = -n) over R[y,z]/(y^2,z^2):
// P_s = A^e e_s with |e_s| = -ns and d(e_s) = r_s e_{s-1}, r_s = y - z for odd
// s and y + (-1)^n z for even s. Tensoring with A turns d into m -> m . r_s.
struct SmallResolution {
    int n = 0;
    int smax = 0;
    bool resolution_exact = false;   // augmented complex over Z, s <= smax + 1
    BigradedGroup hh;
};

SmallResolution small_resolution_hh(BaseRing ring, int n, int smax);

// Cohomological degree k = -t - s. Groups with the same k are summed.
struct LoopSpaceTable {
    int n = 0;
    BaseRing ring;
    int smax = 0;
    int complete_through = 0;        // every k <= this is fully covered by s <= smax
    std::map<int, AbelianGroup> degrees;
};

LoopSpaceTable loop_space_table(int n, BaseRing ring, int smax);

struct HHReport {
    BaseRing ring;
    int n = 0;
    int smax = 0;
    BigradedGroup bar;
    SmallResolution small;
    bool agree = false;
    bool hh0_is_algebra = false;
    bool pass = false;
};

HHReport hh_report(BaseRing ring, int n, int smax);

nlohmann::json to_json_value(const BigradedGroup& g);
BigradedGroup bigraded_group_from_json(const nlohmann::json& j);
nlohmann::json to_json_value(const LoopSpaceTable& t);
nlohmann::json to_json_value(const HHReport& r);

} // namespace entriv
