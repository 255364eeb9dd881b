#pragma once

#include "entriv/rep/module.hpp"

#include <optional>

namespace entriv {

// An element (sigma; tau_0, ..., tau_{a-1}) of Sigma_b wr Sigma_a, acting on
// {0..ab-1} by i*b + j |-> sigma(i)*b + tau_i(j).
struct WreathElement {
    Permutation sigma;
    std::vector<Permutation> tau;
};

Permutation wreath_embed(int a, int b, const WreathElement& w);
std::vector<WreathElement> wreath_group(int a, int b);

struct WreathReport {
    int a = 0;
    int b = 0;
    std::size_t group_order = 0;
    std::size_t restricted_dim = 0;
    std::size_t pulled_back_dim = 0; // dim rho_a
    std::size_t induced_dim = 0;     // a * dim rho_b
    // Indexed like wreath_group(a, b).
    std::vector<Rational> restricted_character;
    std::vector<Rational> decomposed_character;
    bool pass = false;
};

// Compares the character of rho_{ab} restricted along the wreath embedding with
// rho_a pulled back along the quotient to Sigma_a plus Q^a tensor rho_b.
// Throws InvalidInput if a or b < 1, or t_size is given and differs from ab.
WreathReport wreath_decomposition_check(int a, int b, std::optional<int> t_size = std::nullopt);

nlohmann::json to_json_value(const WreathReport& r);

} // namespace entriv
