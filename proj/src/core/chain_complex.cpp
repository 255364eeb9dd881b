#include "entriv/core/chain_complex.hpp"

#include "entriv/core/modp.hpp"
#include "entriv/core/smith.hpp"
#include "entriv/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace entriv {

Coefficients Coefficients::field(std::uint32_t p)
{
    if (p < 2)
        throw InvalidInput("field characteristic must be a prime");
    for (std::uint32_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
    return {Kind::PrimeField, p};
}

ChainComplex::ChainComplex(std::map<int, std::size_t> ranks, std::map<int, IntMatrix> differentials)
    : ranks_(std::move(ranks)), differentials_(std::move(differentials))
{
    for (const auto& [n, d] : differentials_) {
        if (d.rows() != rank(n - 1) || d.cols() != rank(n))
            throw InvalidInput("differential d_" + std::to_string(n) + " has shape " + std::to_string(d.rows()) + "x" +
                               std::to_string(d.cols()) + ", expected " + std::to_string(rank(n - 1)) + "x" +
                               std::to_string(rank(n)));
    }
}

std::size_t ChainComplex::rank(int degree) const
{
    auto it = ranks_.find(degree);
    return it == ranks_.end() ? 0 : it->second;
}

IntMatrix ChainComplex::differential(int degree) const
{
    auto it = differentials_.find(degree);
    if (it != differentials_.end())
        return it->second;
    return IntMatrix(rank(degree - 1), rank(degree));
}

bool ChainComplex::squares_to_zero() const
{
    for (const auto& [n, d] : differentials_) {
        auto below = differentials_.find(n - 1);
        if (below == differentials_.end())
            continue;
        if (!(below->second * d).is_zero())
            return false;
    }
    return true;
}

namespace {

std::set<int> support(const ChainComplex& c)
{
    std::set<int> degrees;
    for (const auto& [n, r] : c.ranks())
        if (r > 0)
            degrees.insert(n);
    return degrees;
}

} // namespace

GradedAbelianGroup homology(const ChainComplex& c, Coefficients coefficients)
{
    if (!c.squares_to_zero())
        throw InvalidInput("differentials do not square to zero");
    GradedAbelianGroup out;
    const auto degrees = support(c);

    if (coefficients.kind == Coefficients::Kind::PrimeField) {
        std::map<int, std::size_t> ranks;
        for (const auto& [n, d] : c.differentials())
            ranks[n] = rank_mod_p(d, coefficients.prime);
        for (int n : degrees) {
            const std::size_t dim = c.rank(n) - ranks[n] - ranks[n + 1];
            out.set(n, AbelianGroup{dim, {}});
        }
        return out;
    }

    std::map<int, SmithForm> snf;
    for (const auto& [n, d] : c.differentials())
        snf.emplace(n, smith_normal_form(d));
    for (int n : degrees) {
        AbelianGroup g;
        std::size_t rank_out = 0, rank_in = 0;
        if (auto it = snf.find(n); it != snf.end())
            rank_out = it->second.rank();
        if (auto it = snf.find(n + 1); it != snf.end()) {
            rank_in = it->second.rank();
            g.torsion = it->second.invariant_factors();
        }
        g.free = c.rank(n) - rank_out - rank_in;
        out.set(n, std::move(g));
    }
    return out;
}

FormalitySplitting formality_splitting(const ChainComplex& c)
{
    const GradedAbelianGroup h = homology(c);

    // Per degree the basis is [free part of H_n][torsion bottoms of H_n][torsion tops of H_{n-1}].
    std::set<int> degrees;
    for (const auto& [n, g] : h.components()) {
        degrees.insert(n);
        if (!g.torsion.empty())
            degrees.insert(n + 1);
    }
    std::map<int, std::size_t> ranks;
    for (int n : degrees)
        ranks[n] = h.at(n).free + h.at(n).torsion.size() + h.at(n - 1).torsion.size();

    std::map<int, IntMatrix> diffs;
    for (const auto& [n, g] : h.components()) {
        if (g.torsion.empty())
            continue;
        // d_{n+1}: tops in degree n+1 hit bottoms in degree n.
        IntMatrix d(ranks[n], ranks[n + 1]);
        const std::size_t top_offset = h.at(n + 1).free + h.at(n + 1).torsion.size();
        for (std::size_t i = 0; i < g.torsion.size(); ++i)
            d(g.free + i, top_offset + i) = g.torsion[i];
        diffs.emplace(n + 1, std::move(d));
    }

    FormalitySplitting out;
    out.minimal = ChainComplex(ranks, std::move(diffs));
    out.certified = homology(out.minimal) == h;
    return out;
}

nlohmann::json to_json_value(const ChainComplex& c)
{
    nlohmann::json j;
    j["ranks"] = nlohmann::json::object();
    for (const auto& [n, r] : c.ranks())
        j["ranks"][std::to_string(n)] = r;
    j["differentials"] = nlohmann::json::object();
    for (const auto& [n, d] : c.differentials())
        j["differentials"][std::to_string(n)] = to_json_value(d);
    return j;
}

ChainComplex chain_complex_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("ranks"))
        throw InvalidInput("chain complex must be an object with 'ranks' and 'differentials'");
    std::map<int, std::size_t> ranks;
    for (const auto& [key, value] : j.at("ranks").items()) {
        if (!value.is_number_integer() || value.get<long long>() < 0)
            throw InvalidInput("rank in degree " + key + " must be a nonnegative integer");
        ranks[std::stoi(key)] = value.get<std::size_t>();
    }
    auto rank = [&](int n) {
        auto it = ranks.find(n);
        return it == ranks.end() ? std::size_t{0} : it->second;
    };
    std::map<int, IntMatrix> diffs;
    if (j.contains("differentials"))
        for (const auto& [key, value] : j.at("differentials").items()) {
            const int n = std::stoi(key);
            diffs.emplace(n, int_matrix_from_json(value, rank(n - 1), rank(n)));
        }
    return ChainComplex(std::move(ranks), std::move(diffs));
}

ChainComplex random_chain_complex(Rng& rng, int top, std::size_t max_rank, long bound)
{
    if (top < 0 || max_rank < 1 || bound < 1)
        throw InvalidInput("random complex needs top >= 0, max_rank >= 1 and bound >= 1");
    std::map<int, std::size_t> ranks;
    for (int n = 0; n <= top; ++n)
        ranks[n] = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_rank)));
    std::map<int, IntMatrix> diffs;
    for (int n = 1; n <= top; ++n) {
        const std::size_t rows = ranks[n - 1], cols = ranks[n];
        IntMatrix d(rows, cols);
        if (n == 1) {
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    d(r, c) = Integer(static_cast<long>(rng.uniform(-bound, bound)));
            diffs.emplace(n, std::move(d));
            continue;
        }
        // ker d_{n-1} is spanned by the columns of the right transform past the rank.
        const IntMatrix& below = diffs.at(n - 1);
        const SmithForm snf = smith_normal_form(below);
        std::vector<std::vector<Integer>> kernel;
        for (std::size_t j = snf.rank(); j < below.cols(); ++j) {
            std::vector<Integer> v(below.cols());
            for (std::size_t r = 0; r < below.cols(); ++r)
                v[r] = snf.right(r, j);
            kernel.push_back(std::move(v));
        }
        for (std::size_t c = 0; c < cols && !kernel.empty(); ++c) {
            std::vector<Integer> col(rows);
            const long scale = static_cast<long>(rng.uniform(1, 3));
            for (const auto& k : kernel) {
                const long coeff = static_cast<long>(rng.uniform(-1, 1)) * scale;
                for (std::size_t r = 0; r < rows; ++r)
                    col[r] += coeff * k[r];
            }
            if (std::any_of(col.begin(), col.end(), [&](const Integer& x) { return abs(x) > bound; }))
                continue;
            for (std::size_t r = 0; r < rows; ++r)
                d(r, c) = col[r];
        }
        diffs.emplace(n, std::move(d));
    }
    return ChainComplex(std::move(ranks), std::move(diffs));
}

} // namespace entriv
