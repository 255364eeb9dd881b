#include "entriv/core/graded_group.hpp"

#include "entriv/error.hpp"

#include <string>

namespace entriv {

std::vector<Integer> normalize_torsion(std::vector<Integer> orders)
{
    std::vector<Integer> v;
    for (auto& d : orders) {
        Integer a = abs(d);
        if (a > 1)
            v.push_back(std::move(a));
    }
    // Pairwise (gcd, lcm) sweep: afterwards v[i] divides every later entry.
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            Integer g = gcd(v[i], v[j]);
            Integer l = lcm(v[i], v[j]);
            v[i] = std::move(g);
            v[j] = std::move(l);
        }
    std::vector<Integer> out;
    for (auto& d : v)
        if (d > 1)
            out.push_back(std::move(d));
    return out;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b)
{
    AbelianGroup out;
    out.free = a.free + b.free;
    out.torsion = a.torsion;
    out.torsion.insert(out.torsion.end(), b.torsion.begin(), b.torsion.end());
    out.torsion = normalize_torsion(std::move(out.torsion));
    return out;
}

void GradedAbelianGroup::set(int degree, AbelianGroup group)
{
    group.torsion = normalize_torsion(std::move(group.torsion));
    if (group.is_zero())
        components_.erase(degree);
    else
        components_[degree] = std::move(group);
}

const AbelianGroup& GradedAbelianGroup::at(int degree) const
{
    static const AbelianGroup zero;
    auto it = components_.find(degree);
    return it == components_.end() ? zero : it->second;
}

nlohmann::json to_json_value(const AbelianGroup& g)
{
    auto torsion = nlohmann::json::array();
    for (const auto& d : g.torsion)
        torsion.push_back(integer_to_json(d));
    return {{"free", g.free}, {"torsion", std::move(torsion)}};
}

AbelianGroup abelian_group_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw InvalidInput("abelian group must be an object with 'free' and 'torsion'");
    AbelianGroup g;
    g.free = j.value("free", std::size_t{0});
    if (j.contains("torsion"))
        for (const auto& d : j.at("torsion"))
            g.torsion.push_back(integer_from_json(d));
    g.torsion = normalize_torsion(std::move(g.torsion));
    return g;
}

nlohmann::json to_json_value(const GradedAbelianGroup& g)
{
    auto j = nlohmann::json::object();
    for (const auto& [deg, group] : g.components())
        j[std::to_string(deg)] = to_json_value(group);
    return j;
}

GradedAbelianGroup graded_group_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw InvalidInput("graded group must be an object keyed by degree");
    GradedAbelianGroup g;
    for (const auto& [key, value] : j.items())
        g.set(std::stoi(key), abelian_group_from_json(value));
    return g;
}

} // namespace entriv
