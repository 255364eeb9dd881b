#include "entriv/error.hpp"
#include "entriv/rep/module.hpp"
#include "entriv/rep/wreath.hpp"
#include "entriv/util/rng.hpp"

#include <doctest.h>

#include <algorithm>

using namespace entriv;

namespace {

Permutation random_permutation(Rng& rng, int n)
{
    Permutation p = identity_permutation(n);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.uniform(0, i))]);
    return p;
}

std::vector<Rational> values(const CharacterVector& chi)
{
    std::vector<Rational> out;
    for (const auto& [lambda, v] : chi.values)
        out.push_back(v);
    return out;
}

} // namespace

TEST_CASE("permutation basics")
{
    Rng rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 8));
        const auto g = random_permutation(rng, n);
        Permutation rebuilt = identity_permutation(n);
        const auto w = reduced_word(g);
        for (int i : w)
            rebuilt = rebuilt * adjacent_transposition(n, i);
        CHECK(rebuilt == g);
        // Length equals the inversion count.
        std::size_t inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (g[static_cast<std::size_t>(i)] > g[static_cast<std::size_t>(j)])
                    ++inv;
        CHECK(w.size() == inv);
        CHECK(g * inverse(g) == identity_permutation(n));
    }
}

TEST_CASE("partitions and class data")
{
    CHECK(partitions(4) == std::vector<Partition>{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}});
    // Class sizes sum to n!.
    for (int n = 1; n <= 8; ++n) {
        Integer total = 0;
        for (const auto& lambda : partitions(n)) {
            CHECK(cycle_type(class_representative(lambda)) == lambda);
            total += factorial(n) / centralizer_order(lambda);
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("rho examples")
{
    CHECK(rho(1).dim() == 0);
    const auto r2 = rho(2);
    CHECK(r2.dim() == 1);
    CHECK(r2.is_monomial());
    CHECK(character(r2) == character(SignedPermModule::sign_rep(2)));
    CHECK(values(character(rho(3))) == std::vector<Rational>{2, 0, -1});
    // Classes (1^4), (2,1^2), (2^2), (3,1), (4): fixed points minus one.
    CHECK(values(character(rho(4))) == std::vector<Rational>{3, 1, -1, 0, -1});
    CHECK(!rho(4).is_monomial());
}

TEST_CASE("rho plus trivial is the permutation character")
{
    for (int n = 1; n <= 8; ++n) {
        const auto chi = character(rho(n)) + character(SignedPermModule::trivial(n));
        CHECK(chi == permutation_character(n));
        CHECK(chi == character(SignedPermModule::standard_permutation(n)));
    }
}

TEST_CASE("rho matrices from generators match the direct formula")
{
    Rng rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const int t = static_cast<int>(rng.uniform(1, 7));
        const auto g = random_permutation(rng, t);
        CHECK(rho(t).matrix(g) == rho_matrix(t, g));
    }
}

TEST_CASE("character examples")
{
    CHECK(values(character(SignedPermModule::trivial(3))) == std::vector<Rational>{1, 1, 1});
    CHECK(values(character(SignedPermModule::regular(2))) == std::vector<Rational>{2, 0});
    CHECK(trivial_multiplicity(SignedPermModule::trivial(4)) == 1);
    CHECK(trivial_multiplicity(SignedPermModule::sign_rep(2)) == 0);
    CHECK(trivial_multiplicity(SignedPermModule::regular(3)) == 1);
}

TEST_CASE("characters are class functions")
{
    Rng rng(8);
    const auto m = tensor(SignedPermModule::words({0, 0, 1, 2}), SignedPermModule::sign_rep(4));
    const auto r = rho(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto g = random_permutation(rng, 4);
        const auto h = random_permutation(rng, 4);
        CHECK(m.trace(g) == m.trace(h * g * inverse(h)));
        const auto g5 = random_permutation(rng, 5);
        const auto h5 = random_permutation(rng, 5);
        CHECK(r.trace(g5) == r.trace(h5 * g5 * inverse(h5)));
    }
}

TEST_CASE("sigma freeness")
{
    for (int n = 1; n <= 5; ++n)
        CHECK(is_sigma_free(SignedPermModule::regular(n)));
    CHECK(!is_sigma_free(SignedPermModule::trivial(2)));
    // Six orderings of three letters.
    CHECK(is_sigma_free(SignedPermModule::words({0, 1, 2})));
    CHECK(!is_sigma_free(SignedPermModule::words({0, 0, 1})));
    CHECK_THROWS_AS(is_sigma_free(rho(3)), InvalidInput);
}

TEST_CASE("free modules have trivial multiplicity dim / n!")
{
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = static_cast<int>(rng.uniform(1, 5));
        std::vector<int> letters(static_cast<std::size_t>(n));
        for (auto& x : letters)
            x = static_cast<int>(rng.uniform(0, n - 1));
        auto m = SignedPermModule::words(letters, rng.coin());
        if (rng.coin())
            m = direct_sum(m, SignedPermModule::regular(n));
        if (is_sigma_free(m))
            CHECK(trivial_multiplicity(m) * factorial(n) == Integer(static_cast<unsigned long>(m.dim())));
    }
    const auto free2 = direct_sum(SignedPermModule::regular(3), SignedPermModule::regular(3).sign_twist(1));
    CHECK(is_sigma_free(free2));
    CHECK(trivial_multiplicity(free2) == 2);
}

TEST_CASE("relations are checked on construction")
{
    // s_0 s_1 = -1 has order two, not three.
    SignedPermutation swap01{{1, 1}, {0, 1}, {2, 1}};
    SignedPermutation neg_swap01{{1, -1}, {0, -1}, {2, -1}};
    CHECK_THROWS_AS(SignedPermModule::monomial(3, 3, {swap01, neg_swap01}), InvalidInput);
    CHECK_NOTHROW(SignedPermModule::monomial(3, 3, {swap01, swap01}));
    CHECK_THROWS_AS(SignedPermModule::monomial(2, 2, {{{0, 1}, {0, 1}}}), InvalidInput);
    CHECK_THROWS_AS(SignedPermModule::monomial(2, 1, {{{0, 2}}}), InvalidInput);
    CHECK_NOTHROW(SignedPermModule::monomial(2, 2, {SignedPermutation{{1, -1}, {0, -1}}}));
}

TEST_CASE("module json round trip")
{
    const auto m = SignedPermModule::words({0, 1, 1}, true);
    CHECK(signed_perm_module_from_json(to_json_value(m)) == m);
    const auto r = rho(4);
    CHECK(character(signed_perm_module_from_json(to_json_value(r))) == character(r));
}

TEST_CASE("wreath decomposition")
{
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const auto rep = wreath_decomposition_check(a, b);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(rep.pass);
            Integer order = factorial(a);
            for (int i = 0; i < a; ++i)
                order *= factorial(b);
            CHECK(Integer(static_cast<unsigned long>(rep.group_order)) == order);
        }
    const auto r22 = wreath_decomposition_check(2, 2);
    CHECK(r22.group_order == 8);
    CHECK(r22.restricted_dim == 3);
    CHECK(r22.pulled_back_dim == 1);
    CHECK(r22.induced_dim == 2);
    CHECK_THROWS_AS(wreath_decomposition_check(2, 2, 5), InvalidInput);
    CHECK_THROWS_AS(wreath_decomposition_check(0, 2), InvalidInput);
}

TEST_CASE("wreath check detects a wrong decomposition")
{
    // Dropping the rho_a summand must break the identity whenever a > 1.
    const auto rep = wreath_decomposition_check(2, 2);
    std::vector<Rational> wrong = rep.decomposed_character;
    const auto group = wreath_group(2, 2);
    for (std::size_t k = 0; k < group.size(); ++k)
        wrong[k] -= rho_matrix(2, group[k].sigma).trace();
    CHECK(wrong != rep.restricted_character);
}
