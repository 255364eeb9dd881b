#include "entriv/symseq/symseq.hpp"

#include "entriv/error.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <tuple>

namespace entriv {

SymSeq::SymSeq(int truncation) : truncation_(truncation)
{
    if (truncation < 1 || truncation > kMaxSymmetricRank)
        throw InvalidInput("truncation must lie in 1.." + std::to_string(kMaxSymmetricRank));
}

void SymSeq::set(int arity, int degree, SignedPermModule module)
{
    if (arity == 0)
        throw InvalidInput("symmetric sequences here are non-unital: arity 0 is not allowed");
    if (arity < 1 || arity > truncation_)
        throw InvalidInput("arity " + std::to_string(arity) + " outside 1.." + std::to_string(truncation_));
    if (module.n() != arity)
        throw InvalidInput("arity " + std::to_string(arity) + " component is a module over Sigma_" +
                           std::to_string(module.n()));
    if (module.dim() == 0) {
        auto it = components_.find(arity);
        if (it != components_.end()) {
            it->second.erase(degree);
            if (it->second.empty())
                components_.erase(it);
        }
        return;
    }
    components_[arity][degree] = std::move(module);
}

const SignedPermModule* SymSeq::find(int arity, int degree) const
{
    auto it = components_.find(arity);
    if (it == components_.end())
        return nullptr;
    auto jt = it->second.find(degree);
    return jt == it->second.end() ? nullptr : &jt->second;
}

std::size_t SymSeq::dim(int arity, int degree) const
{
    const auto* m = find(arity, degree);
    return m ? m->dim() : 0;
}

bool SymSeq::has_arity(int arity) const { return components_.count(arity) > 0; }

SymSeq unit_sequence(int truncation)
{
    SymSeq s(truncation);
    s.set(1, 0, SignedPermModule::trivial(1));
    return s;
}

namespace {

void rgs_rec(int n, std::vector<int>& r, int max_label, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(r.size()) == n) {
        out.push_back(r);
        return;
    }
    for (int label = 0; label <= max_label + 1; ++label) {
        r.push_back(label);
        rgs_rec(n, r, std::max(max_label, label), out);
        r.pop_back();
    }
}

std::vector<std::vector<int>> all_rgs(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    if (n == 0)
        return {r};
    r.push_back(0);
    rgs_rec(n, r, 0, out);
    return out;
}

SetPartition blocks_of(const std::vector<int>& rgs)
{
    SetPartition blocks;
    for (std::size_t x = 0; x < rgs.size(); ++x) {
        const auto label = static_cast<std::size_t>(rgs[x]);
        if (blocks.size() <= label)
            blocks.resize(label + 1);
        blocks[label].push_back(static_cast<int>(x));
    }
    return blocks;
}

Integer stabilizer_of_sizes(const std::vector<int>& sizes)
{
    std::map<int, int> mult;
    for (int s : sizes)
        ++mult[s];
    Integer z = 1;
    for (const auto& [s, m] : mult)
        z *= ipow(factorial(s), static_cast<unsigned long>(m)) * factorial(m);
    return z;
}

// Image of a set partition under g: the relabeled growth string, the induced
// block permutation pi (old block j lands in position pi[j]) and, per block,
// the induced bijection of sorted positions.
struct PartitionImage {
    std::vector<int> rgs;
    Permutation pi;
    std::vector<Permutation> tau;
};

PartitionImage act_on_partition(const Permutation& g, const std::vector<int>& rgs, const SetPartition& blocks)
{
    const std::size_t n = rgs.size();
    std::vector<int> moved(n);
    for (std::size_t x = 0; x < n; ++x)
        moved[static_cast<std::size_t>(g[x])] = rgs[x];
    PartitionImage out;
    out.pi.assign(blocks.size(), -1);
    int next = 0;
    out.rgs.resize(n);
    for (std::size_t y = 0; y < n; ++y) {
        auto& label = out.pi[static_cast<std::size_t>(moved[y])];
        if (label < 0)
            label = next++;
        out.rgs[y] = label;
    }
    for (const auto& block : blocks) {
        std::vector<int> images;
        for (int x : block)
            images.push_back(g[static_cast<std::size_t>(x)]);
        std::vector<int> sorted = images;
        std::sort(sorted.begin(), sorted.end());
        Permutation tau(block.size());
        for (std::size_t r = 0; r < block.size(); ++r)
            tau[r] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), images[r]) - sorted.begin());
        out.tau.push_back(std::move(tau));
    }
    return out;
}

// Degree -> value, with convolution as product.
using Poly = std::map<int, Integer>;

Poly convolve(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [da, x] : a)
        for (const auto& [db, y] : b)
            out[da + db] += x * y;
    return out;
}

Poly dimension_poly(const SymSeq& s, int arity)
{
    Poly p;
    auto it = s.components().find(arity);
    if (it != s.components().end())
        for (const auto& [d, m] : it->second)
            p[d] = static_cast<unsigned long>(m.dim());
    return p;
}

Integer dimension_for_sizes(const SymSeq& a, const SymSeq& b, const std::vector<int>& sizes, int degree)
{
    Poly p = dimension_poly(a, static_cast<int>(sizes.size()));
    for (int m : sizes)
        p = convolve(p, dimension_poly(b, m));
    auto it = p.find(degree);
    return it == p.end() ? Integer(0) : it->second;
}

void check_compose_inputs(const SymSeq& a, const SymSeq& b, int truncation)
{
    if (truncation < 1)
        throw InvalidInput("truncation must be at least 1");
    if (truncation > a.truncation() || truncation > b.truncation())
        throw InvalidInput("truncation " + std::to_string(truncation) + " exceeds the input data (inputs truncated at " +
                           std::to_string(a.truncation()) + " and " + std::to_string(b.truncation()) + ")");
}

// Memoized actions of group elements on the components of one sequence.
class ActionCache {
public:
    explicit ActionCache(const SymSeq& s) : s_(s) {}

    const SignedPermutation& act(int arity, int degree, const Permutation& g)
    {
        auto key = std::make_tuple(arity, degree, g);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        return cache_.emplace(std::move(key), s_.find(arity, degree)->act(g)).first->second;
    }

    Rational trace(int arity, int degree, const Permutation& g)
    {
        auto key = std::make_tuple(arity, degree, g);
        auto it = traces_.find(key);
        if (it != traces_.end())
            return it->second;
        return traces_.emplace(std::move(key), s_.find(arity, degree)->trace(g)).first->second;
    }

private:
    const SymSeq& s_;
    std::map<std::tuple<int, int, Permutation>, SignedPermutation> cache_;
    std::map<std::tuple<int, int, Permutation>, Rational> traces_;
};

constexpr std::size_t kMaxComposeBasis = std::size_t{1} << 20;

void compose_arity(const SymSeq& a, const SymSeq& b, int n, SymSeq& out)
{
    const auto rgs_list = all_rgs(n);
    std::map<std::vector<int>, int> rgs_index;
    std::vector<SetPartition> blocks;
    for (std::size_t i = 0; i < rgs_list.size(); ++i) {
        rgs_index[rgs_list[i]] = static_cast<int>(i);
        blocks.push_back(blocks_of(rgs_list[i]));
    }

    // Basis keys [pid, dA, a, d_1, b_1, ..., d_k, b_k], grouped by total degree.
    std::map<int, std::vector<std::vector<int>>> basis;
    std::size_t total = 0;
    for (std::size_t pid = 0; pid < blocks.size(); ++pid) {
        const int k = static_cast<int>(blocks[pid].size());
        auto ait = a.components().find(k);
        if (ait == a.components().end())
            continue;
        std::vector<const std::map<int, SignedPermModule>*> factors;
        bool empty = false;
        for (const auto& block : blocks[pid]) {
            auto bit = b.components().find(static_cast<int>(block.size()));
            if (bit == b.components().end()) {
                empty = true;
                break;
            }
            factors.push_back(&bit->second);
        }
        if (empty)
            continue;
        for (const auto& [da, ma] : ait->second) {
            // Depth-first over (degree, index) choices for each B factor.
            std::vector<int> key{static_cast<int>(pid), da, 0};
            std::function<void(std::size_t, int)> rec = [&](std::size_t j, int degree) {
                if (j == factors.size()) {
                    auto& bucket = basis[degree];
                    for (std::size_t ai = 0; ai < ma.dim(); ++ai) {
                        key[2] = static_cast<int>(ai);
                        bucket.push_back(key);
                    }
                    total += ma.dim();
                    if (total > kMaxComposeBasis)
                        throw LimitExceeded("composition product basis exceeds " + std::to_string(kMaxComposeBasis));
                    return;
                }
                for (const auto& [db, mb] : *factors[j])
                    for (std::size_t bi = 0; bi < mb.dim(); ++bi) {
                        key.push_back(db);
                        key.push_back(static_cast<int>(bi));
                        rec(j + 1, degree + db);
                        key.pop_back();
                        key.pop_back();
                    }
            };
            rec(0, da);
        }
    }

    ActionCache act_a(a), act_b(b);
    for (auto& [degree, keys] : basis) {
        std::sort(keys.begin(), keys.end());
        std::map<std::vector<int>, std::size_t> index;
        for (std::size_t i = 0; i < keys.size(); ++i)
            index[keys[i]] = i;
        std::vector<SignedPermutation> gens;
        for (int i = 0; i + 1 < n; ++i) {
            const Permutation s = adjacent_transposition(n, i);
            SignedPermutation gen(keys.size());
            for (std::size_t e = 0; e < keys.size(); ++e) {
                const auto& key = keys[e];
                const auto pid = static_cast<std::size_t>(key[0]);
                const int k = static_cast<int>(blocks[pid].size());
                const auto img = act_on_partition(s, rgs_list[pid], blocks[pid]);
                std::vector<int> degrees(static_cast<std::size_t>(k));
                std::vector<int> image(key.size());
                image[0] = rgs_index.at(img.rgs);
                image[1] = key[1];
                const auto& sa = act_a.act(k, key[1], img.pi)[static_cast<std::size_t>(key[2])];
                image[2] = static_cast<int>(sa.index);
                int sign = sa.sign;
                for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
                    const int d = key[3 + 2 * j];
                    degrees[j] = d;
                    const int m = static_cast<int>(blocks[pid][j].size());
                    const auto& sb = act_b.act(m, d, img.tau[j])[static_cast<std::size_t>(key[4 + 2 * j])];
                    const auto slot = static_cast<std::size_t>(img.pi[j]);
                    image[3 + 2 * slot] = d;
                    image[4 + 2 * slot] = static_cast<int>(sb.index);
                    sign *= sb.sign;
                }
                sign *= koszul_sign(degrees, img.pi);
                gen[e] = {index.at(image), sign};
            }
            gens.push_back(std::move(gen));
        }
        out.set(n, degree, SignedPermModule::monomial(n, keys.size(), std::move(gens)));
    }
}

void require_monomial(const SymSeq& s)
{
    for (const auto& [arity, byDegree] : s.components())
        for (const auto& [d, m] : byDegree)
            if (!m.is_monomial())
                throw InvalidInput("compose materializes monomial modules only (arity " + std::to_string(arity) +
                                   ", degree " + std::to_string(d) + ")");
}

} // namespace

std::vector<SetPartition> set_partitions(int n)
{
    std::vector<SetPartition> out;
    for (const auto& r : all_rgs(n))
        out.push_back(blocks_of(r));
    return out;
}

std::vector<PartitionOrbit> partition_orbits(int n)
{
    // Orbits correspond to block-size multisets; the transversal keeps the
    // first set partition seen with each multiset.
    std::vector<PartitionOrbit> out;
    std::map<std::vector<int>, std::size_t> seen;
    for (auto& p : set_partitions(n)) {
        std::vector<int> sizes;
        for (const auto& block : p)
            sizes.push_back(static_cast<int>(block.size()));
        std::sort(sizes.rbegin(), sizes.rend());
        if (seen.count(sizes))
            continue;
        seen[sizes] = out.size();
        PartitionOrbit orbit;
        orbit.representative = std::move(p);
        orbit.block_sizes = sizes;
        orbit.stabilizer_order = stabilizer_of_sizes(sizes);
        orbit.orbit_size = factorial(n) / orbit.stabilizer_order;
        out.push_back(std::move(orbit));
    }
    return out;
}

int koszul_sign(const std::vector<int>& degrees, const Permutation& pi)
{
    int sign = 1;
    for (std::size_t j = 0; j < degrees.size(); ++j)
        for (std::size_t l = j + 1; l < degrees.size(); ++l)
            if (pi[j] > pi[l] && (degrees[j] & 1) && (degrees[l] & 1))
                sign = -sign;
    return sign;
}

SymSeq compose(const SymSeq& a, const SymSeq& b, int truncation)
{
    check_compose_inputs(a, b, truncation);
    if (truncation > kMaxMaterializedArity)
        throw LimitExceeded("compose materializes up to arity " + std::to_string(kMaxMaterializedArity) +
                            "; use compose_characters beyond that");
    require_monomial(a);
    require_monomial(b);
    SymSeq out(truncation);
    for (int n = 1; n <= truncation; ++n)
        compose_arity(a, b, n, out);
    return out;
}

GradedCharacters compose_characters(const SymSeq& a, const SymSeq& b, int truncation)
{
    check_compose_inputs(a, b, truncation);
    ActionCache cache_a(a), cache_b(b);
    GradedCharacters out;
    for (int n = 1; n <= truncation; ++n) {
        const auto rgs_list = all_rgs(n);
        std::vector<SetPartition> blocks;
        for (const auto& r : rgs_list)
            blocks.push_back(blocks_of(r));
        const auto classes = partitions(n);
        std::map<int, std::map<Partition, Rational>> values;
        for (const auto& lambda : classes) {
            const Permutation g = class_representative(lambda);
            std::map<int, Rational> by_degree;
            for (std::size_t pid = 0; pid < rgs_list.size(); ++pid) {
                const auto img = act_on_partition(g, rgs_list[pid], blocks[pid]);
                if (img.rgs != rgs_list[pid])
                    continue;
                const int k = static_cast<int>(blocks[pid].size());
                auto ait = a.components().find(k);
                if (ait == a.components().end())
                    continue;
                std::map<int, Rational> poly;
                for (const auto& [da, ma] : ait->second)
                    poly[da] = cache_a.trace(k, da, img.pi);
                // Each cycle of the block permutation contributes the trace of
                // the composite of its block bijections, in a single degree.
                std::vector<bool> done(static_cast<std::size_t>(k), false);
                for (std::size_t j0 = 0; j0 < static_cast<std::size_t>(k) && !poly.empty(); ++j0) {
                    if (done[j0])
                        continue;
                    const int m = static_cast<int>(blocks[pid][j0].size());
                    Permutation composite = identity_permutation(m);
                    int length = 0;
                    for (std::size_t j = j0; !done[j]; j = static_cast<std::size_t>(img.pi[j])) {
                        done[j] = true;
                        composite = img.tau[j] * composite;
                        ++length;
                    }
                    std::map<int, Rational> factor;
                    auto bit = b.components().find(m);
                    if (bit != b.components().end())
                        for (const auto& [db, mb] : bit->second) {
                            Rational t = cache_b.trace(m, db, composite);
                            if ((db & 1) && (length - 1) % 2 != 0)
                                t = -t;
                            factor[db * length] += t;
                        }
                    std::map<int, Rational> next;
                    for (const auto& [d1, x] : poly)
                        for (const auto& [d2, y] : factor)
                            next[d1 + d2] += x * y;
                    poly = std::move(next);
                }
                for (const auto& [d, v] : poly)
                    by_degree[d] += v;
            }
            for (const auto& [d, v] : by_degree)
                values[d][lambda] = v;
        }
        const Partition id(static_cast<std::size_t>(n), 1);
        for (auto& [d, vals] : values) {
            if (vals[id] == 0)
                continue;
            CharacterVector chi;
            chi.n = n;
            for (const auto& lambda : classes)
                chi.values[lambda] = vals.count(lambda) ? vals[lambda] : Rational(0);
            out[n][d] = std::move(chi);
        }
    }
    return out;
}

GradedCharacters characters(const SymSeq& s)
{
    GradedCharacters out;
    for (const auto& [arity, byDegree] : s.components())
        for (const auto& [d, m] : byDegree)
            out[arity][d] = character(m);
    return out;
}

Integer raw_dimension_sum(const SymSeq& a, const SymSeq& b, int n, int degree)
{
    Integer total = 0;
    for (const auto& p : set_partitions(n)) {
        std::vector<int> sizes;
        for (const auto& block : p)
            sizes.push_back(static_cast<int>(block.size()));
        total += dimension_for_sizes(a, b, sizes, degree);
    }
    return total;
}

Integer orbit_dimension_sum(const SymSeq& a, const SymSeq& b, int n, int degree)
{
    Integer total = 0;
    for (const auto& orbit : partition_orbits(n))
        total += orbit.orbit_size * dimension_for_sizes(a, b, orbit.block_sizes, degree);
    return total;
}

SymSeq suspend(const SymSeq& a, int k)
{
    SymSeq out(a.truncation());
    for (const auto& [n, byDegree] : a.components())
        for (const auto& [d, m] : byDegree)
            out.set(n, d + k * (n - 1), m.sign_twist(k));
    return out;
}

std::vector<FreePieceEntry> free_piece_rational(const SymSeq& a, int generator_degree, int arity)
{
    auto it = a.components().find(arity);
    if (it == a.components().end())
        throw InvalidInput("arity " + std::to_string(arity) + " component is absent");
    std::vector<FreePieceEntry> out;
    for (const auto& [e, m] : it->second)
        out.push_back({e + arity * generator_degree, trivial_multiplicity(m.sign_twist(generator_degree))});
    return out;
}

MonoidalityReport monoidality_report(const SymSeq& a, const SymSeq& b, int truncation)
{
    check_compose_inputs(a, b, truncation);
    GradedCharacters lhs, rhs;
    if (truncation <= kMaxMaterializedArity) {
        lhs = characters(suspend(compose(a, b, truncation), 1));
        rhs = characters(compose(suspend(a, 1), suspend(b, 1), truncation));
    } else {
        // Suspension on characters: shift degrees by n-1 and multiply by the sign.
        for (const auto& [n, byDegree] : compose_characters(a, b, truncation))
            for (const auto& [d, chi] : byDegree) {
                CharacterVector twisted = chi;
                for (auto& [lambda, v] : twisted.values)
                    if (sign(class_representative(lambda)) < 0)
                        v = -v;
                lhs[n][d + n - 1] = std::move(twisted);
            }
        rhs = compose_characters(suspend(a, 1), suspend(b, 1), truncation);
    }
    MonoidalityReport report;
    report.truncation = truncation;
    report.pass = true;
    std::map<std::pair<int, int>, MonoidalityEntry> entries;
    auto visit = [&](const GradedCharacters& side, bool left) {
        for (const auto& [n, byDegree] : side)
            for (const auto& [d, chi] : byDegree) {
                auto& e = entries[{n, d}];
                e.arity = n;
                e.degree = d;
                const auto dim = chi.values.at(Partition(static_cast<std::size_t>(n), 1)).get_num().get_ui();
                (left ? e.lhs_dim : e.rhs_dim) = dim;
            }
    };
    visit(lhs, true);
    visit(rhs, false);
    for (auto& [key, e] : entries) {
        const auto lit = lhs.find(e.arity);
        const auto rit = rhs.find(e.arity);
        const CharacterVector* lc = nullptr;
        const CharacterVector* rc = nullptr;
        if (lit != lhs.end() && lit->second.count(e.degree))
            lc = &lit->second.at(e.degree);
        if (rit != rhs.end() && rit->second.count(e.degree))
            rc = &rit->second.at(e.degree);
        e.characters_match = lc && rc && *lc == *rc;
        e.pass = e.characters_match && e.lhs_dim == e.rhs_dim;
        report.pass = report.pass && e.pass;
        report.entries.push_back(e);
    }
    return report;
}

nlohmann::json to_json_value(const SymSeq& s)
{
    nlohmann::json comps = nlohmann::json::object();
    for (const auto& [n, byDegree] : s.components())
        for (const auto& [d, m] : byDegree)
            comps[std::to_string(n)][std::to_string(d)] = to_json_value(m);
    return {{"truncation", s.truncation()}, {"components", std::move(comps)}};
}

SymSeq symseq_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("truncation"))
        throw InvalidInput("symmetric sequence must be an object with 'truncation' and 'components'");
    SymSeq s(j.at("truncation").get<int>());
    if (j.contains("components"))
        for (const auto& [arity, byDegree] : j.at("components").items())
            for (const auto& [degree, module] : byDegree.items())
                s.set(std::stoi(arity), std::stoi(degree), signed_perm_module_from_json(module));
    return s;
}

nlohmann::json to_json_value(const MonoidalityReport& r)
{
    auto entries = nlohmann::json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"arity", e.arity},
                           {"degree", e.degree},
                           {"lhs_dim", e.lhs_dim},
                           {"rhs_dim", e.rhs_dim},
                           {"characters_match", e.characters_match},
                           {"pass", e.pass}});
    return {{"truncation", r.truncation}, {"entries", std::move(entries)}, {"pass", r.pass}};
}

nlohmann::json to_json_value(const GradedCharacters& c)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [n, byDegree] : c)
        for (const auto& [d, chi] : byDegree)
            out[std::to_string(n)][std::to_string(d)] = to_json_value(chi)["values"];
    return out;
}

nlohmann::json dimension_table(const SymSeq& s)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [n, byDegree] : s.components())
        for (const auto& [d, m] : byDegree)
            out[std::to_string(n)][std::to_string(d)] = m.dim();
    return out;
}

} // namespace entriv
