#include "entriv/rep/wreath.hpp"

#include "entriv/error.hpp"

#include <string>

namespace entriv {

Permutation wreath_embed(int a, int b, const WreathElement& w)
{
    Permutation g(static_cast<std::size_t>(a * b));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            g[static_cast<std::size_t>(i * b + j)] =
                w.sigma[static_cast<std::size_t>(i)] * b + w.tau[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return g;
}

std::vector<WreathElement> wreath_group(int a, int b)
{
    const auto outer = all_permutations(a);
    const auto inner = all_permutations(b);
    std::vector<WreathElement> out;
    for (const auto& sigma : outer) {
        // Odometer over the a inner coordinates.
        std::vector<std::size_t> idx(static_cast<std::size_t>(a), 0);
        for (;;) {
            WreathElement w{sigma, {}};
            for (auto k : idx)
                w.tau.push_back(inner[k]);
            out.push_back(std::move(w));
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == inner.size())
                idx[pos++] = 0;
            if (pos == idx.size())
                break;
        }
    }
    return out;
}

WreathReport wreath_decomposition_check(int a, int b, std::optional<int> t_size)
{
    if (a < 1 || b < 1)
        throw InvalidInput("wreath check needs a, b >= 1");
    if (t_size && *t_size != a * b)
        throw InvalidInput("a*b = " + std::to_string(a * b) + " does not match T_size = " + std::to_string(*t_size));
    check_rank(a * b);

    WreathReport r;
    r.a = a;
    r.b = b;
    const SignedPermModule big = rho(a * b);
    r.restricted_dim = big.dim();
    r.pulled_back_dim = static_cast<std::size_t>(a - 1);
    r.induced_dim = static_cast<std::size_t>(a * (b - 1));

    const auto group = wreath_group(a, b);
    r.group_order = group.size();
    for (const auto& w : group) {
        // Left side: rho_{ab} through its generator presentation.
        r.restricted_character.push_back(big.trace(wreath_embed(a, b, w)));
        // Right side: rho_a(sigma) plus the block-permutation trace of Q^a (x) rho_b.
        Rational rhs = rho_matrix(a, w.sigma).trace();
        for (int i = 0; i < a; ++i)
            if (w.sigma[static_cast<std::size_t>(i)] == i)
                rhs += rho_matrix(b, w.tau[static_cast<std::size_t>(i)]).trace();
        r.decomposed_character.push_back(rhs);
    }
    r.pass = r.restricted_dim == r.pulled_back_dim + r.induced_dim &&
             r.restricted_character == r.decomposed_character;
    return r;
}

nlohmann::json to_json_value(const WreathReport& r)
{
    auto lhs = nlohmann::json::array();
    auto rhs = nlohmann::json::array();
    for (const auto& v : r.restricted_character)
        lhs.push_back(rational_to_json(v));
    for (const auto& v : r.decomposed_character)
        rhs.push_back(rational_to_json(v));
    return {{"a", r.a},
            {"b", r.b},
            {"group_order", r.group_order},
            {"dims", {{"restricted", r.restricted_dim}, {"pulled_back", r.pulled_back_dim}, {"induced", r.induced_dim}}},
            {"restricted_character", std::move(lhs)},
            {"decomposed_character", std::move(rhs)},
            {"pass", r.pass}};
}

} // namespace entriv
