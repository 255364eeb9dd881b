#pragma once

#include "entriv/symseq/symseq.hpp"
#include "entriv/util/rng.hpp"

namespace oracle {

// Random monomial module: a few permutation modules on words with random
// letter content, each possibly sign twisted, kept small.
inline entriv::SignedPermModule random_monomial_module(entriv::Rng& rng, int n, std::size_t max_dim = 12)
{
    entriv::SignedPermModule m = entriv::SignedPermModule::zero(n);
    const int summands = static_cast<int>(rng.uniform(1, 2));
    for (int s = 0; s < summands; ++s) {
        std::vector<int> letters(static_cast<std::size_t>(n));
        const int alphabet = static_cast<int>(rng.uniform(1, n));
        for (auto& x : letters)
            x = static_cast<int>(rng.uniform(0, alphabet - 1));
        auto w = entriv::SignedPermModule::words(letters, rng.coin());
        if (m.dim() + w.dim() > max_dim)
            continue;
        m = entriv::direct_sum(m, w);
    }
    if (m.dim() == 0)
        m = entriv::SignedPermModule::trivial(n).sign_twist(static_cast<int>(rng.uniform(0, 1)));
    return m;
}

// Random sequence with each arity present with probability ~1/2 and one or
// two degrees in [dmin, dmax] per arity.
inline entriv::SymSeq random_symseq(entriv::Rng& rng, int truncation, int dmin, int dmax, std::size_t max_dim = 6)
{
    entriv::SymSeq s(truncation);
    for (int n = 1; n <= truncation; ++n) {
        if (rng.uniform(0, 1) == 0)
            continue;
        const int degrees = static_cast<int>(rng.uniform(1, 2));
        for (int k = 0; k < degrees; ++k)
            s.set(n, static_cast<int>(rng.uniform(dmin, dmax)), random_monomial_module(rng, n, max_dim));
    }
    return s;
}

} // namespace oracle
