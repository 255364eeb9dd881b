#pragma once

#include "entriv/core/integer.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace entriv {

// A finitely generated abelian group Z^free + Z/d_1 + ... + Z/d_k with
// d_1 | d_2 | ... | d_k and every d_i >= 2. Over a field the torsion list is
// empty and `free` is the dimension.
struct AbelianGroup {
    std::size_t free = 0;
    std::vector<Integer> torsion;

    bool is_zero() const { return free == 0 && torsion.empty(); }
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Rewrites an arbitrary list of cyclic orders into the invariant-factor
// chain. Orders 0 and 1 are dropped.
std::vector<Integer> normalize_torsion(std::vector<Integer> orders);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

class GradedAbelianGroup {
public:
    GradedAbelianGroup() = default;

    // Zero components are not stored; torsion is normalized on the way in.
    void set(int degree, AbelianGroup group);
    const AbelianGroup& at(int degree) const;
    const std::map<int, AbelianGroup>& components() const { return components_; }
    bool empty() const { return components_.empty(); }

    friend bool operator==(const GradedAbelianGroup&, const GradedAbelianGroup&) = default;

private:
    std::map<int, AbelianGroup> components_;
};

nlohmann::json to_json_value(const AbelianGroup& g);
AbelianGroup abelian_group_from_json(const nlohmann::json& j);
nlohmann::json to_json_value(const GradedAbelianGroup& g);
GradedAbelianGroup graded_group_from_json(const nlohmann::json& j);

} // namespace entriv
