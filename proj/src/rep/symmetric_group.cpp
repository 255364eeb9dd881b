#include "entriv/rep/symmetric_group.hpp"

#include "entriv/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace entriv {

void check_rank(int n)
{
    if (n < 1 || n > kMaxSymmetricRank)
        throw InvalidInput("symmetric group rank " + std::to_string(n) + " outside 1.." +
                           std::to_string(kMaxSymmetricRank));
}

Permutation identity_permutation(int n)
{
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation adjacent_transposition(int n, int i)
{
    if (i < 0 || i + 1 >= n)
        throw InvalidInput("transposition index out of range");
    Permutation p = identity_permutation(n);
    std::swap(p[i], p[i + 1]);
    return p;
}

Permutation operator*(const Permutation& g, const Permutation& h)
{
    if (g.size() != h.size())
        throw InvalidInput("composing permutations of different sizes");
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        out[i] = g[static_cast<std::size_t>(h[i])];
    return out;
}

Permutation inverse(const Permutation& g)
{
    Permutation out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        out[static_cast<std::size_t>(g[i])] = static_cast<int>(i);
    return out;
}

bool is_permutation(const Permutation& g)
{
    std::vector<bool> seen(g.size(), false);
    for (int x : g) {
        if (x < 0 || static_cast<std::size_t>(x) >= g.size() || seen[static_cast<std::size_t>(x)])
            return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

int sign(const Permutation& g)
{
    int s = 1;
    for (const int len : cycle_type(g))
        if (len % 2 == 0)
            s = -s;
    return s;
}

std::vector<int> reduced_word(const Permutation& g)
{
    // Peel right descents: if g(i) > g(i+1) then g = (g s_i) s_i with g s_i shorter.
    Permutation h = g;
    std::vector<int> reversed;
    for (;;) {
        std::size_t i = 0;
        while (i + 1 < h.size() && h[i] < h[i + 1])
            ++i;
        if (i + 1 >= h.size())
            break;
        std::swap(h[i], h[i + 1]);
        reversed.push_back(static_cast<int>(i));
    }
    return {reversed.rbegin(), reversed.rend()};
}

std::vector<Permutation> all_permutations(int n)
{
    std::vector<Permutation> out;
    Permutation p = identity_permutation(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& current, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    Partition current;
    partitions_rec(n, n, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

Partition cycle_type(const Permutation& g)
{
    std::vector<bool> seen(g.size(), false);
    Partition out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (seen[i])
            continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(g[j])) {
            seen[j] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

Permutation class_representative(const Partition& lambda)
{
    const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    Permutation p(static_cast<std::size_t>(n));
    int start = 0;
    for (int len : lambda) {
        for (int k = 0; k < len; ++k)
            p[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
        start += len;
    }
    return p;
}

Integer factorial(int n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer centralizer_order(const Partition& lambda)
{
    std::vector<int> mult(lambda.empty() ? 1 : static_cast<std::size_t>(lambda.front()) + 1, 0);
    for (int part : lambda)
        ++mult[static_cast<std::size_t>(part)];
    Integer z = 1;
    for (std::size_t i = 1; i < mult.size(); ++i)
        z *= ipow(Integer(static_cast<unsigned long>(i)), static_cast<unsigned long>(mult[i])) * factorial(mult[i]);
    return z;
}

} // namespace entriv
