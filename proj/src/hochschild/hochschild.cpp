#include "entriv/hochschild/hochschild.hpp"

#include "entriv/error.hpp"

#include <algorithm>

namespace entriv {

BaseRing BaseRing::field(std::uint32_t p)
{
    Coefficients::field(p);
    return {Kind::PrimeField, p};
}

BaseRing BaseRing::parse(const std::string& name)
{
    if (name == "Z")
        return integers();
    if (name == "Q")
        return rationals();
    if (name.size() >= 2 && name[0] == 'F' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }) && name.size() < 8)
        return field(static_cast<std::uint32_t>(std::stoul(name.substr(1))));
    throw InvalidInput("unknown ring '" + name + "' (expected Z, Q or F<p>)");
}

std::string BaseRing::name() const
{
    switch (kind) {
    case Kind::Integers:
        return "Z";
    case Kind::Rationals:
        return "Q";
    case Kind::PrimeField:
        break;
    }
    return "F" + std::to_string(prime);
}

namespace {

bool odd(long v) { return v % 2 != 0; }

LinearCombination normalize(const BaseRing& ring, std::map<std::size_t, Integer> terms)
{
    LinearCombination out;
    for (auto& [i, c] : terms) {
        if (ring.kind == BaseRing::Kind::PrimeField) {
            c %= Integer(static_cast<unsigned long>(ring.prime));
            if (c < 0)
                c += ring.prime;
        }
        if (c != 0)
            out.emplace_back(i, c);
    }
    return out;
}

} // namespace

GradedUnitalAlgebra::GradedUnitalAlgebra(BaseRing ring, std::vector<std::string> names, std::vector<int> degrees,
                                         std::map<std::pair<std::size_t, std::size_t>, LinearCombination> products)
    : ring_(ring), names_(std::move(names)), degrees_(std::move(degrees))
{
    const std::size_t d = degrees_.size();
    if (d == 0 || names_.size() != d)
        throw InvalidInput("algebra needs one name and one degree per basis element, unit first");
    if (degrees_[0] != 0)
        throw InvalidInput("the unit sits in degree 0");
    table_.assign(d, std::vector<LinearCombination>(d));
    for (std::size_t i = 0; i < d; ++i) {
        table_[0][i] = {{i, Integer(1)}};
        table_[i][0] = {{i, Integer(1)}};
    }
    for (const auto& [key, value] : products) {
        const auto [i, j] = key;
        if (i >= d || j >= d)
            throw InvalidInput("product refers to a basis index out of range");
        std::map<std::size_t, Integer> terms;
        for (const auto& [k, c] : value) {
            if (k >= d)
                throw InvalidInput("product term out of range");
            if (degrees_[k] != degrees_[i] + degrees_[j])
                throw InvalidInput("product " + names_[i] + "*" + names_[j] + " is not homogeneous");
            terms[k] += c;
        }
        auto lc = normalize(ring_, std::move(terms));
        if ((i == 0 || j == 0) && lc != table_[i][j])
            throw InvalidInput("e_0 must be the unit");
        table_[i][j] = std::move(lc);
    }
    auto times = [&](const LinearCombination& a, std::size_t j, bool left) {
        std::map<std::size_t, Integer> terms;
        for (const auto& [k, c] : a)
            for (const auto& [l, e] : left ? table_[j][k] : table_[k][j])
                terms[l] += c * e;
        return normalize(ring_, std::move(terms));
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto swapped = table_[j][i];
            if (odd(degrees_[i]) && odd(degrees_[j])) {
                std::map<std::size_t, Integer> terms;
                for (const auto& [k, c] : swapped)
                    terms[k] = -c;
                swapped = normalize(ring_, std::move(terms));
            }
            if (swapped != table_[i][j])
                throw InvalidInput("algebra is not graded commutative at " + names_[i] + ", " + names_[j]);
            for (std::size_t k = 0; k < d; ++k)
                if (times(table_[i][j], k, false) != times(table_[j][k], i, true))
                    throw InvalidInput("algebra is not associative at " + names_[i] + ", " + names_[j] + ", " +
                                       names_[k]);
        }
}

const LinearCombination& GradedUnitalAlgebra::multiply(std::size_t i, std::size_t j) const
{
    return table_.at(i).at(j);
}

std::map<int, std::size_t> GradedUnitalAlgebra::degree_ranks() const
{
    std::map<int, std::size_t> out;
    for (int deg : degrees_)
        ++out[deg];
    return out;
}

GradedUnitalAlgebra square_zero_extension(BaseRing ring, int n)
{
    return GradedUnitalAlgebra(ring, {"1", "x"}, {0, -n}, {});
}

GradedUnitalAlgebra ground_ring(BaseRing ring) { return GradedUnitalAlgebra(ring, {"1"}, {0}, {}); }

void BigradedGroup::set(int s, int t, AbelianGroup g)
{
    if (g.is_zero())
        groups.erase({s, t});
    else
        groups[{s, t}] = std::move(g);
}

AbelianGroup BigradedGroup::at(int s, int t) const
{
    const auto it = groups.find({s, t});
    return it == groups.end() ? AbelianGroup{} : it->second;
}

namespace {

// Complexes graded by s, one per internal degree t, from sparse entries.
struct Builder {
    std::map<int, std::map<int, std::size_t>> ranks;                              // t -> s -> rank
    std::map<int, std::map<int, std::map<std::pair<std::size_t, std::size_t>, Integer>>> entries; // t -> s

    std::map<int, ChainComplex> finish() const
    {
        std::map<int, ChainComplex> out;
        for (const auto& [t, rk] : ranks) {
            std::map<int, IntMatrix> diffs;
            if (const auto it = entries.find(t); it != entries.end())
                for (const auto& [s, es] : it->second) {
                    IntMatrix m(rk.count(s - 1) ? rk.at(s - 1) : 0, rk.at(s));
                    for (const auto& [rc, v] : es) {
                        if (rc.first >= m.rows() || rc.second >= m.cols())
                            throw Error("internal: differential entry outside its block");
                        m(rc.first, rc.second) += v;
                    }
                    diffs.emplace(s, std::move(m));
                }
            out.emplace(t, ChainComplex(rk, std::move(diffs)));
        }
        return out;
    }
};

BigradedGroup homology_over(const BaseRing& ring, const std::map<int, ChainComplex>& complexes, int smax)
{
    BigradedGroup out;
    const Coefficients coeffs = ring.kind == BaseRing::Kind::PrimeField ? Coefficients::field(ring.prime)
                                                                         : Coefficients::integers();
    for (const auto& [t, c] : complexes) {
        const auto h = homology(c, coeffs);
        for (auto [s, g] : h.components()) {
            if (s > smax)
                continue;
            if (ring.kind == BaseRing::Kind::Rationals)
                g.torsion.clear();
            out.set(s, t, std::move(g));
        }
    }
    return out;
}

} // namespace

std::map<int, ChainComplex> bar_complexes(const GradedUnitalAlgebra& a, int smax)
{
    if (smax < 0)
        throw InvalidInput("smax must be nonnegative");
    const std::size_t d = a.dim();
    const std::size_t dbar = d - 1;
    {
        double size = static_cast<double>(d);
        for (int s = 0; s <= smax + 1; ++s, size *= static_cast<double>(dbar))
            if (size > static_cast<double>(kMaxBarBasis))
                throw LimitExceeded("bar complex in Hochschild degree " + std::to_string(s) + " exceeds " +
                                    std::to_string(kMaxBarBasis) + " basis elements");
    }
    Builder b;
    // position of each tuple within its (s, t) block
    std::vector<std::map<std::vector<std::size_t>, std::pair<int, std::size_t>>> index(
        static_cast<std::size_t>(smax + 2));
    for (int s = 0; s <= smax + 1; ++s) {
        if (dbar == 0 && s > 0)
            break;
        std::vector<std::size_t> tuple(static_cast<std::size_t>(s + 1), 1);
        tuple[0] = 0;
        for (;;) {
            int t = 0;
            for (std::size_t e : tuple)
                t += a.degree(e);
            auto& rk = b.ranks[t][s];
            index[static_cast<std::size_t>(s)][tuple] = {t, rk++};
            bool done = true;
            for (std::size_t pos = tuple.size(); pos-- > 0;) {
                if (++tuple[pos] < d) {
                    done = false;
                    break;
                }
                tuple[pos] = pos == 0 ? 0 : 1;
            }
            if (done)
                break;
        }
    }
    for (int s = 1; s <= smax + 1; ++s) {
        const auto& here = index[static_cast<std::size_t>(s)];
        const auto& below = index[static_cast<std::size_t>(s - 1)];
        for (const auto& [tuple, where] : here) {
            const auto [t, col] = where;
            auto& es = b.entries[t][s];
            auto emit = [&](const std::vector<std::size_t>& target, const Integer& coef) {
                const auto it = below.find(target);
                es[{it->second.second, col}] += coef;
            };
            for (int i = 0; i < s; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                for (const auto& [c, coef] : a.multiply(tuple[ui], tuple[ui + 1])) {
                    if (i > 0 && c == 0)
                        continue;
                    std::vector<std::size_t> target;
                    target.insert(target.end(), tuple.begin(), tuple.begin() + i);
                    target.push_back(c);
                    target.insert(target.end(), tuple.begin() + i + 2, tuple.end());
                    emit(target, odd(i) ? Integer(-coef) : coef);
                }
            }
            long before = 0;
            for (int k = 0; k < s; ++k)
                before += a.degree(tuple[static_cast<std::size_t>(k)]);
            const bool negative = odd(s) != (odd(a.degree(tuple.back())) && odd(before));
            for (const auto& [c, coef] : a.multiply(tuple.back(), tuple[0])) {
                std::vector<std::size_t> target{c};
                target.insert(target.end(), tuple.begin() + 1, tuple.end() - 1);
                emit(target, negative ? Integer(-coef) : coef);
            }
        }
    }
    return b.finish();
}

BigradedGroup bar_hochschild(const GradedUnitalAlgebra& a, int smax)
{
    return homology_over(a.ring(), bar_complexes(a, smax), smax);
}

namespace {

constexpr int kMaxResolutionDegree = 256;

// A^e = A (x) A for A = Z[x]/x^2, basis (i, j) -> 2 i + j.
struct Enveloping {
    int n;
    int deg(std::size_t i) const { return i == 0 ? 0 : -n; }

    // (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd
    std::vector<Integer> multiply(const std::vector<Integer>& u, const std::vector<Integer>& v) const
    {
        std::vector<Integer> out(4);
        for (std::size_t p = 0; p < 4; ++p)
            for (std::size_t q = 0; q < 4; ++q) {
                if (u[p] == 0 || v[q] == 0)
                    continue;
                const std::size_t a = p / 2, b = p % 2, c = q / 2, d = q % 2;
                if (a + c > 1 || b + d > 1)
                    continue;
                const bool neg = odd(deg(b)) && odd(deg(c));
                out[2 * (a + c) + (b + d)] += neg ? Integer(-u[p] * v[q]) : Integer(u[p] * v[q]);
            }
        return out;
    }

    std::vector<Integer> relation(int s) const
    {
        // y = x (x) 1, z = 1 (x) x
        std::vector<Integer> r(4);
        r[2] = 1;
        r[1] = (s % 2 == 1) ? -1 : (odd(n) ? -1 : 1);
        return r;
    }

    // m . (a (x) b) = (-1)^{|a|(|m| + |b|)} b m a on A
    std::vector<Integer> act(std::size_t m, const std::vector<Integer>& u) const
    {
        std::vector<Integer> out(2);
        for (std::size_t p = 0; p < 4; ++p) {
            if (u[p] == 0)
                continue;
            const std::size_t a = p / 2, b = p % 2;
            if (a + b + m > 1)
                continue;
            const bool neg = odd(deg(a)) && odd(deg(m) + deg(b));
            out[a + b + m] += neg ? Integer(-u[p]) : u[p];
        }
        return out;
    }
};

} // namespace

SmallResolution small_resolution_hh(BaseRing ring, int n, int smax)
{
    if (n < 1)
        throw InvalidInput("n must be at least 1");
    if (smax < 0 || smax > kMaxResolutionDegree)
        throw InvalidInput("smax must lie in 0.." + std::to_string(kMaxResolutionDegree));
    const Enveloping env{n};
    SmallResolution out;
    out.n = n;
    out.smax = smax;

    // Augmented resolution over Z, degree -1 is A, split by internal degree.
    {
        Builder b;
        for (std::size_t m = 0; m < 2; ++m)
            ++b.ranks[env.deg(m)][-1];
        std::map<std::pair<int, int>, std::map<std::size_t, std::size_t>> pos; // (t, s) -> basis -> index
        for (int s = 0; s <= smax + 1; ++s)
            for (std::size_t p = 0; p < 4; ++p) {
                const int t = env.deg(p / 2) + env.deg(p % 2) - n * s;
                pos[{t, s}][p] = b.ranks[t][s]++;
            }
        for (std::size_t p = 0; p < 4; ++p) {
            const std::size_t a = p / 2, c = p % 2;
            const int t = env.deg(a) + env.deg(c);
            // each internal degree of A holds a single basis element
            if (a + c <= 1)
                b.entries[t][0][{0, pos.at({t, 0}).at(p)}] += 1;
        }
        for (int s = 1; s <= smax + 1; ++s)
            for (std::size_t p = 0; p < 4; ++p) {
                std::vector<Integer> u(4);
                u[p] = 1;
                const auto image = env.multiply(u, env.relation(s));
                const int t = env.deg(p / 2) + env.deg(p % 2) - n * s;
                for (std::size_t q = 0; q < 4; ++q)
                    if (image[q] != 0)
                        b.entries[t][s][{pos.at({t, s - 1}).at(q), pos.at({t, s}).at(p)}] += image[q];
            }
        out.resolution_exact = true;
        for (const auto& [t, c] : b.finish()) {
            const auto h = homology(c);
            for (const auto& [s, g] : h.components())
                if (s <= smax && !g.is_zero())
                    out.resolution_exact = false;
        }
    }

    Builder b;
    for (int s = 0; s <= smax + 1; ++s)
        for (std::size_t m = 0; m < 2; ++m)
            ++b.ranks[env.deg(m) - n * s][s];
    // Within each (t, s) block there is exactly one basis element.
    for (int s = 1; s <= smax + 1; ++s)
        for (std::size_t m = 0; m < 2; ++m) {
            const auto image = env.act(m, env.relation(s));
            const int t = env.deg(m) - n * s;
            for (std::size_t q = 0; q < 2; ++q)
                if (image[q] != 0)
                    b.entries[t][s][{0, 0}] += image[q];
        }
    out.hh = homology_over(ring, b.finish(), smax);
    return out;
}

LoopSpaceTable loop_space_table(int n, BaseRing ring, int smax)
{
    if (n < 2)
        throw InvalidInput("the loop space dictionary needs n >= 2");
    LoopSpaceTable out;
    out.n = n;
    out.ring = ring;
    out.smax = smax;
    out.complete_through = (n - 1) * (smax + 1) - 1;
    for (const auto& [st, g] : small_resolution_hh(ring, n, smax).hh.groups) {
        const int k = -st.second - st.first;
        out.degrees[k] = direct_sum(out.degrees[k], g);
    }
    return out;
}

HHReport hh_report(BaseRing ring, int n, int smax)
{
    HHReport r;
    r.ring = ring;
    r.n = n;
    r.smax = smax;
    const auto a = square_zero_extension(ring, n);
    r.bar = bar_hochschild(a, smax);
    r.small = small_resolution_hh(ring, n, smax);
    r.agree = r.bar == r.small.hh;
    r.hh0_is_algebra = true;
    const auto ranks = a.degree_ranks();
    for (const auto& [st, g] : r.bar.groups)
        if (st.first == 0 && (!ranks.contains(st.second) || g != AbelianGroup{ranks.at(st.second), {}}))
            r.hh0_is_algebra = false;
    for (const auto& [t, rank] : ranks)
        if (r.bar.at(0, t) != AbelianGroup{rank, {}})
            r.hh0_is_algebra = false;
    r.pass = r.agree && r.hh0_is_algebra && r.small.resolution_exact;
    return r;
}

nlohmann::json to_json_value(const BigradedGroup& g)
{
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [st, group] : g.groups)
        out[std::to_string(st.first) + "," + std::to_string(st.second)] = to_json_value(group);
    return out;
}

BigradedGroup bigraded_group_from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        throw InvalidInput("bigraded group must be an object keyed by \"s,t\"");
    BigradedGroup g;
    for (const auto& [key, value] : j.items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos)
            throw InvalidInput("bad bidegree key '" + key + "'");
        try {
            g.set(std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)), abelian_group_from_json(value));
        } catch (const std::logic_error&) {
            throw InvalidInput("bad bidegree key '" + key + "'");
        }
    }
    return g;
}

nlohmann::json to_json_value(const LoopSpaceTable& t)
{
    nlohmann::json degrees = nlohmann::json::object();
    for (const auto& [k, g] : t.degrees)
        degrees[std::to_string(k)] = to_json_value(g);
    return {{"n", t.n},
            {"ring", t.ring.name()},
            {"smax", t.smax},
            {"grading", "k = -t - s"},
            {"complete_through", t.complete_through},
            {"degrees", degrees}};
}

nlohmann::json to_json_value(const HHReport& r)
{
    return {{"ring", r.ring.name()},
            {"n", r.n},
            {"smax", r.smax},
            {"bar", to_json_value(r.bar)},
            {"small_resolution", to_json_value(r.small.hh)},
            {"resolution_exact", r.small.resolution_exact},
            {"agree", r.agree},
            {"hh0_is_algebra", r.hh0_is_algebra},
            {"pass", r.pass}};
}

} // namespace entriv
