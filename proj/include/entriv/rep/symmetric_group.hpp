#pragma once

#include "entriv/core/integer.hpp"

#include <cstddef>
#include <vector>

namespace entriv {

// Largest n for which symmetric-group computations are allowed.
inline constexpr int kMaxSymmetricRank = 10;

// p[i] is the image of i; composition is right-to-left: (g*h)[i] = g[h[i]].
using Permutation = std::vector<int>;
// Parts in weakly decreasing order.
using Partition = std::vector<int>;

Permutation identity_permutation(int n);
// The adjacent transposition (i, i+1), 0-based.
Permutation adjacent_transposition(int n, int i);
Permutation operator*(const Permutation& g, const Permutation& h);
Permutation inverse(const Permutation& g);
bool is_permutation(const Permutation& g);
int sign(const Permutation& g);

// Word w with g = s_{w[0]} s_{w[1]} ... s_{w[k-1]} of minimal length.
std::vector<int> reduced_word(const Permutation& g);

// All of Sigma_n in lexicographic order of image vectors.
std::vector<Permutation> all_permutations(int n);

// Partitions of n, sorted lexicographically as part vectors, so (1^n) first
// and (n) last.
std::vector<Partition> partitions(int n);
Partition cycle_type(const Permutation& g);
// Cycles on consecutive blocks: (0 1 ... l1-1)(l1 ... l1+l2-1)...
Permutation class_representative(const Partition& lambda);
// z_lambda = prod_i i^{m_i} m_i!, the centralizer order.
Integer centralizer_order(const Partition& lambda);
Integer factorial(int n);

void check_rank(int n);

} // namespace entriv
