#include "entriv/error.hpp"
#include "entriv/steenrod/cochains.hpp"
#include "entriv/util/rng.hpp"

#include <doctest.h>

#include <bit>
#include <map>
#include <set>

using namespace entriv;

namespace {

using Tuple = std::vector<int>;

// Oracle on an ordered simplicial complex: cochains are functions on sorted
// vertex tuples, restriction is taking a sub-tuple, and every simplex is
// nondegenerate.
struct ComplexOracle {
    std::vector<std::vector<Tuple>> by_dim;

    explicit ComplexOracle(const SimplicialSet& x)
    {
        for (int d = 0; d <= x.dimension(); ++d) {
            by_dim.emplace_back();
            for (std::size_t i = 0; i < x.count(d); ++i) {
                Tuple t;
                std::string name = x.name(d, i);
                std::size_t pos = 0;
                while (pos <= name.size()) {
                    const auto next = name.find('_', pos);
                    t.push_back(std::stoi(name.substr(pos, next - pos)));
                    if (next == std::string::npos)
                        break;
                    pos = next + 1;
                }
                by_dim.back().push_back(t);
            }
        }
    }

    std::map<Tuple, int> as_map(const Cochain& c) const
    {
        std::map<Tuple, int> m;
        for (std::size_t i = 0; i < c.values.size(); ++i)
            m[by_dim[static_cast<std::size_t>(c.degree)][i]] = c.values[i];
        return m;
    }

    Cochain cup(const Cochain& a, const Cochain& b, int i) const
    {
        const auto ma = as_map(a), mb = as_map(b);
        const int n = a.degree + b.degree - i;
        Cochain out{n, {}};
        if (n >= static_cast<int>(by_dim.size()))
            return out;
        for (const auto& sigma : by_dim[static_cast<std::size_t>(n)]) {
            int total = 0;
            // all subsets J of {0..n} of size i+1, by bitmask
            for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
                if (std::popcount(mask) != i + 1)
                    continue;
                std::vector<int> js;
                for (int v = 0; v <= n; ++v)
                    if (mask >> v & 1u)
                        js.push_back(v);
                js.push_back(n);
                std::set<int> u0, u1;
                int lo = 0;
                for (std::size_t k = 0; k < js.size(); ++k) {
                    for (int v = lo; v <= js[k]; ++v)
                        (k % 2 == 0 ? u0 : u1).insert(v);
                    lo = js[k];
                }
                if (static_cast<int>(u0.size()) != a.degree + 1 || static_cast<int>(u1.size()) != b.degree + 1)
                    continue;
                Tuple f0, f1;
                for (int v : u0)
                    f0.push_back(sigma[static_cast<std::size_t>(v)]);
                for (int v : u1)
                    f1.push_back(sigma[static_cast<std::size_t>(v)]);
                total += ma.at(f0) * mb.at(f1);
            }
            out.values.push_back(static_cast<std::uint8_t>(total % 2));
        }
        return out;
    }
};

Cochain random_cochain(Rng& rng, const SimplicialSet& x, int d)
{
    Cochain c = zero_cochain(x, d);
    for (auto& v : c.values)
        v = rng.coin() ? 1 : 0;
    return c;
}

void check_coboundary_identity(const SimplicialSet& x, Rng& rng, int trials)
{
    const int top = x.dimension();
    for (int t = 0; t < trials; ++t) {
        const int p = static_cast<int>(rng.uniform(0, top));
        const int q = static_cast<int>(rng.uniform(0, top));
        const int i = static_cast<int>(rng.uniform(0, std::min(p, q)));
        const Cochain a = random_cochain(rng, x, p);
        const Cochain b = random_cochain(rng, x, q);
        Cochain rhs = cup_i(x, a, coboundary(x, b), i) + cup_i(x, coboundary(x, a), b, i);
        if (i > 0)
            rhs = rhs + cup_i(x, a, b, i - 1) + cup_i(x, b, a, i - 1);
        CAPTURE(p);
        CAPTURE(q);
        CAPTURE(i);
        REQUIRE(coboundary(x, cup_i(x, a, b, i)) == rhs);
    }
}

} // namespace

TEST_CASE("sphere models")
{
    const auto s1 = sphere_model(1);
    CHECK(s1.count(0) == 1);
    CHECK(s1.count(1) == 1);
    const auto e = s1.nondegenerate(1, 0);
    CHECK_FALSE(s1.face(e, 0).degenerate());
    CHECK_FALSE(s1.face(e, 1).degenerate());
    const auto s2 = sphere_model(2);
    for (int i = 0; i <= 2; ++i)
        CHECK(s2.face(s2.nondegenerate(2, 0), i).degenerate());
    const auto s3 = sphere_model(3);
    for (int d = 0; d <= 4; ++d)
        CHECK(cohomology_dimension(s3, d) == (d == 0 || d == 3 ? 1u : 0u));
    CHECK_THROWS_AS(sphere_model(0), InvalidInput);
}

TEST_CASE("iterated faces of the sphere model collapse to the vertex")
{
    const auto s4 = sphere_model(4);
    const auto top = s4.nondegenerate(4, 0);
    const auto v = s4.restrict(4, 0, {1, 3});
    CHECK(v.dim == 0);
    CHECK(v.eta == std::vector<int>{0, 0});
    CHECK(s4.restrict(4, 0, {0, 1, 2, 3, 4}) == top);
}

TEST_CASE("cohomology of the test complexes")
{
    const auto rp2 = rp2_model();
    CHECK(rp2.count(0) == 6);
    CHECK(rp2.count(1) == 15);
    CHECK(rp2.count(2) == 10);
    for (int d = 0; d <= 2; ++d)
        CHECK(cohomology_dimension(rp2, d) == 1u);
    const auto d3 = standard_simplex(3);
    CHECK(cohomology_dimension(d3, 0) == 1u);
    for (int d = 1; d <= 3; ++d)
        CHECK(cohomology_dimension(d3, d) == 0u);
}

TEST_CASE("malformed simplicial sets are rejected")
{
    SimplicialSet x;
    x.add_vertex("a");
    x.add_vertex("b");
    CHECK_THROWS_AS(x.add_vertex("a"), InvalidInput);
    CHECK_THROWS_AS(x.add_simplex("e", {{"c", {}}, {"a", {}}}), InvalidInput);
    CHECK_THROWS_AS(x.add_simplex("e", {{"a", {1}}, {"a", {}}}), InvalidInput);
    x.add_simplex("ab", {{"b", {}}, {"a", {}}});
    x.add_simplex("aa", {{"a", {}}, {"a", {}}});
    // d_0 d_2 must equal d_1 d_0; here d_2 = ab has d_0 = b but d_0 = aa has d_0 = a
    CHECK_THROWS_AS(x.add_simplex("t", {{"aa", {}}, {"aa", {}}, {"ab", {}}}), InvalidInput);
    const auto json = nlohmann::json::parse(
        R"({"simplices": {"0": ["v"], "2": [{"name":"t","faces":[["v",[0]],["v",[0]],["v",[0]]]}]}})");
    const auto s2 = simplicial_set_from_json(json);
    CHECK(s2.count(2) == 1);
    CHECK(to_json_value(s2) == json);
    CHECK(to_json_value(simplicial_set_from_json(to_json_value(rp2_model()))) == to_json_value(rp2_model()));
}

TEST_CASE("cup_i on spheres")
{
    const auto s1 = sphere_model(1);
    const Cochain x1{1, {1}};
    CHECK(cup_i(s1, x1, x1, 0).values.empty());
    CHECK(cup_i(s1, x1, x1, 1) == Cochain{1, {1}});
    const auto s2 = sphere_model(2);
    const Cochain x2{2, {1}};
    CHECK(cup_i(s2, x2, x2, 2) == Cochain{2, {1}});
    CHECK(is_zero(cup_i(s2, x2, zero_cochain(s2, 2), 2)));
    CHECK_THROWS_AS(cup_i(s2, x2, x2, 3), InvalidInput);
    CHECK_THROWS_AS(cup_i(s2, x2, Cochain{0, {1}}, 1), InvalidInput);
}

TEST_CASE("cup_0 on the 2-simplex is front face times back face")
{
    const auto d2 = standard_simplex(2);
    Cochain a = zero_cochain(d2, 1), b = zero_cochain(d2, 1);
    a.values[d2.lookup("0_1")] = 1;
    b.values[d2.lookup("1_2")] = 1;
    CHECK(cup_i(d2, a, b, 0) == Cochain{2, {1}});
    CHECK(cup_i(d2, b, a, 0) == Cochain{2, {0}});
}

TEST_CASE("cup_i matches the complex oracle on RP2 and the 3-simplex")
{
    Rng rng(3);
    for (const auto& x : {rp2_model(), standard_simplex(3)}) {
        const ComplexOracle oracle(x);
        for (int t = 0; t < 200; ++t) {
            const int p = static_cast<int>(rng.uniform(0, x.dimension()));
            const int q = static_cast<int>(rng.uniform(0, x.dimension()));
            const int i = static_cast<int>(rng.uniform(0, std::min(p, q)));
            const auto a = random_cochain(rng, x, p);
            const auto b = random_cochain(rng, x, q);
            CHECK(cup_i(x, a, b, i) == oracle.cup(a, b, i));
        }
    }
}

TEST_CASE("coboundary identity on random cochains")
{
    Rng rng(17);
    check_coboundary_identity(rp2_model(), rng, 1000);
    check_coboundary_identity(standard_simplex(3), rng, 300);
    check_coboundary_identity(standard_simplex(4), rng, 300);
    for (int n = 1; n <= 3; ++n)
        check_coboundary_identity(sphere_model(n), rng, 100);
}

Cochain nonzero_degree_one_class(const SimplicialSet& x, Rng& rng)
{
    for (;;) {
        const auto w = random_cochain(rng, x, 1);
        if (is_cocycle(x, w) && !is_coboundary(x, w))
            return w;
    }
}

TEST_CASE("cup_0 is associative and commutative up to coboundary on RP2 cocycles")
{
    const auto x = rp2_model();
    Rng rng(23);
    const auto w = nonzero_degree_one_class(x, rng);
    std::vector<Cochain> cocycles;
    for (int k = 0; k < 16; ++k) {
        auto c = coboundary(x, random_cochain(rng, x, 0));
        if (rng.coin())
            c = c + w;
        REQUIRE(is_cocycle(x, c));
        cocycles.push_back(c);
    }
    for (const auto& a : cocycles)
        for (const auto& b : cocycles) {
            CHECK(coboundary(x, cup_i(x, a, b, 1)) == cup_i(x, a, b, 0) + cup_i(x, b, a, 0));
            CHECK(cohomologous(x, cup_i(x, a, b, 0), cup_i(x, b, a, 0)));
        }
    const Cochain one{0, std::vector<std::uint8_t>(6, 1)};
    for (const auto& a : cocycles)
        CHECK(cup_i(x, one, a, 0) == a);
    const Cochain z{0, {1, 0, 1, 1, 0, 0}};
    for (const auto& a : cocycles)
        for (const auto& b : cocycles)
            CHECK(cup_i(x, cup_i(x, z, a, 0), b, 0) == cup_i(x, z, cup_i(x, a, b, 0), 0));
}

TEST_CASE("the nonzero class of RP2 squares to the top class")
{
    const auto x = rp2_model();
    Rng rng(29);
    const auto w = nonzero_degree_one_class(x, rng);
    const auto s1 = sq(x, 1, w);
    CHECK(s1.degree == 2);
    CHECK_FALSE(s1.zero_class);
    const auto s0 = sq(x, 0, w);
    CHECK(cohomologous(x, s0.representative, w));
    CHECK(sq(x, 2, w).zero_class);
}

TEST_CASE("squares on spheres")
{
    for (int n = 1; n <= 3; ++n) {
        const auto x = sphere_model(n);
        const Cochain g{n, {1}};
        const auto s0 = sq(x, 0, g);
        CHECK(s0.representative == g);
        CHECK_FALSE(s0.zero_class);
        CHECK(sq(x, n, g).zero_class);
        CHECK(sq(x, n + 1, g).zero_class);
    }
    const auto d2 = standard_simplex(2);
    Cochain not_cocycle = zero_cochain(d2, 1);
    not_cocycle.values[0] = 1;
    CHECK_THROWS_AS(sq(d2, 0, not_cocycle), InvalidInput);
}

TEST_CASE("triviality witness")
{
    for (int n = 1; n <= 5; ++n) {
        const auto w = triviality_witness(n);
        CHECK(w.pass);
        CHECK(w.sq0_is_generator);
        CHECK(w.trivial_algebra_value == 0);
    }
}
