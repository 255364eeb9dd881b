#pragma once

#include "entriv/core/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace entriv {

// left * m * right == diag(diagonal), padded with zeros to the shape of m.
// The nonzero diagonal entries are positive and form a divisibility chain.
struct SmithForm {
    std::vector<Integer> diagonal; // length min(rows, cols)
    IntMatrix left;                // rows x rows, unimodular
    IntMatrix right;               // cols x cols, unimodular

    std::size_t rank() const;
    // Entries > 1, i.e. the torsion of the cokernel.
    std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Recomputes left * m * right and checks it against the diagonal, plus
// |det| = 1 for both transforms.
bool verify_smith_form(const IntMatrix& m, const SmithForm& snf);

nlohmann::json to_json_value(const SmithForm& snf);

// Optional on-disk memo of Smith forms keyed by the serialized matrix. The
// process-wide cache is off unless install_snf_cache() is called (the CLI does
// so when ENTRIV_CACHE_DIR is set).
void install_snf_cache(const std::string& directory);
void uninstall_snf_cache();
std::optional<std::string> snf_cache_directory();

} // namespace entriv
