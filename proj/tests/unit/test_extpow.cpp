#include "entriv/error.hpp"
#include "entriv/extpow/extpow.hpp"
#include "entriv/stunted/stunted.hpp"

#include <doctest.h>

#include <set>

using namespace entriv;

namespace {

std::map<std::string, int> labels(const DLBasis& b)
{
    std::map<std::string, int> out;
    for (const auto& c : b.classes)
        out[class_label(c)] = c.degree;
    return out;
}

std::map<int, std::size_t> degree_counts(const std::vector<DLClass>& v)
{
    std::map<int, std::size_t> out;
    for (const auto& c : v)
        ++out[c.degree];
    return out;
}

} // namespace

TEST_CASE("dyer-lashof bases at p = 3, n = 2")
{
    const Window w{-6, 4};
    CHECK(labels(dl_basis(3, 2, Family::EInfinity, w)) ==
          std::map<std::string, int>{{"Q^-1", -4}, {"betaQ^0", -1}, {"Q^0", 0}, {"betaQ^1", 3}, {"Q^1", 4}});
    CHECK(labels(dl_basis(3, 2, Family::EnMinus1, w)) == std::map<std::string, int>{{"Q^-1", -4}});
    CHECK(labels(dl_basis(3, 2, Family::EnPlus1, w)) ==
          std::map<std::string, int>{{"Q^-1", -4}, {"betaQ^0", -1}, {"Q^0", 0}});
    CHECK(labels(dl_basis(3, 1, Family::E2Bottom, w)) == std::map<std::string, int>{{"betaQ^0", -1}, {"Q^0", 0}});
    CHECK(labels(dl_basis(5, 1, Family::E1Zero, w)) == std::map<std::string, int>{{"iota^p", 0}});
    CHECK_THROWS_AS(dl_basis(2, 2, Family::EInfinity, w), InvalidInput);
    CHECK_THROWS_AS(dl_basis(3, 2, Family::EInfinity, {4, -6}), InvalidInput);
    CHECK_THROWS_AS(family_from_string("e7"), InvalidInput);
}

TEST_CASE("bockstein classes appear exactly when the strict inequality holds")
{
    for (unsigned p : {3u, 5u, 7u})
        for (int n = 1; n <= 8; ++n)
            for (Family f : {Family::EInfinity, Family::EnPlus1, Family::EnMinus1}) {
                const auto b = dl_basis(p, n, f, {-100, 100});
                for (int s = -10; s <= 4; ++s) {
                    const bool q = std::count(b.classes.begin(), b.classes.end(),
                                              DLClass{ClassKind::Q, s, s * 2 * (static_cast<int>(p) - 1)});
                    const bool bq = std::count(b.classes.begin(), b.classes.end(),
                                               DLClass{ClassKind::BetaQ, s, s * 2 * (static_cast<int>(p) - 1) - 1});
                    const int cap = f == Family::EInfinity ? 100 : (f == Family::EnPlus1 ? 0 : -1);
                    CHECK(q == (2 * s >= -n && s <= cap));
                    CHECK(bq == (2 * s > -n && s <= cap));
                }
            }
}

TEST_CASE("stunted models")
{
    CHECK(p2_stunted_model(3, Family::EnPlus1).cells({-10, 10}) == std::vector<int>{-3, -2, -1, 0});
    CHECK(p2_stunted_model(3, Family::EnMinus1).cells({-10, 10}) == std::vector<int>{-3, -2});
    CHECK(p2_stunted_model(5, Family::E2Bottom).cells({-10, 10}) == std::vector<int>{-1, 0});
    CHECK(!p2_stunted_model(2, Family::EInfinity).top.has_value());
    CHECK_THROWS_AS(p2_stunted_model(2, Family::E1Zero), InvalidInput);
}

TEST_CASE("at p = 2 the class ranges and the stunted cells agree")
{
    for (int n = 1; n <= 8; ++n)
        for (Family f : {Family::EnMinus1, Family::EnPlus1, Family::EInfinity, Family::E2Bottom,
                         Family::EInfinityBottom, Family::E1Zero, Family::EInfinityZero}) {
            const Window w{-n - 4, 12};
            const auto classes = dl_classes(2, n, f, w);
            std::map<int, std::size_t> cells;
            for (int j : stunted_model_any(n, f).cells(w))
                ++cells[j];
            CAPTURE(n);
            CAPTURE(family_name(f));
            CHECK(degree_counts(classes.classes) == cells);
        }
}

TEST_CASE("short exact sequences")
{
    const auto r = verify_ses(3, 2, Sequence::First);
    CHECK(r.pass);
    CHECK(r.check.degrees.at(-4).a == 1);
    CHECK(r.check.degrees.at(-4).b == 1);
    CHECK(r.check.degrees.at(-4).c == 0);
    CHECK(r.check.degrees.at(-1).b == 1);
    CHECK(r.check.degrees.at(-1).c == 1);
    CHECK(r.check.degrees.at(0).c == 1);

    const auto r2 = verify_ses(2, 3, Sequence::First);
    CHECK(r2.pass);
    std::vector<int> a, c, b;
    for (const auto& x : r2.a.classes)
        a.push_back(x.degree);
    for (const auto& x : r2.b.classes)
        b.push_back(x.degree);
    for (const auto& x : r2.c.classes)
        c.push_back(x.degree);
    CHECK(a == std::vector<int>{-3, -2});
    CHECK(c == std::vector<int>{-1, 0});
    CHECK(b == std::vector<int>{-3, -2, -1, 0});

    const auto r3 = verify_ses(5, 1, Sequence::Second, Window{-20, 20});
    CHECK(r3.pass);
    CHECK(r3.a.classes.empty());

    for (unsigned p : {2u, 3u, 5u, 7u})
        for (int n = 1; n <= 8; ++n)
            for (auto which : {Sequence::First, Sequence::Second})
                CHECK(verify_ses(p, n, which).pass);
}

TEST_CASE("exactness checker rejects broken sequences")
{
    const Window w{-10, 4};
    const auto a = dl_basis(3, 4, Family::EnMinus1, w);
    const auto b = dl_basis(3, 4, Family::EnPlus1, w);
    const auto c = dl_basis(3, 1, Family::E2Bottom, w);
    ClassMap f, g;
    for (const auto& x : a.classes)
        f[x] = x;
    for (const auto& y : b.classes)
        g[y] = y.s >= 0 ? std::optional<DLClass>(y) : std::nullopt;
    CHECK(check_short_exact(a, b, c, f, g).pass);
    // Killing the top class breaks surjectivity; keeping a low class breaks g o f = 0.
    auto g1 = g;
    g1[DLClass{ClassKind::Q, 0, 0}] = std::nullopt;
    CHECK(!check_short_exact(a, b, c, f, g1).pass);
    auto g2 = g;
    g2[a.classes.front()] = a.classes.front();
    CHECK(!check_short_exact(a, b, c, f, g2).pass);
    // Dropping a class from the middle breaks additivity.
    auto b_short = b;
    b_short.classes.pop_back();
    CHECK(!check_short_exact(a, b_short, c, f, g).pass);
}

TEST_CASE("pushout square")
{
    const auto r = pushout_rank_check(3, 2, Window{-10, 0});
    CHECK(r.pass);
    CHECK(r.left_kernel == std::map<int, std::size_t>{{-4, 1}});
    const auto r2 = pushout_rank_check(2, 4);
    CHECK(r2.pass);
    CHECK(r2.left_kernel == std::map<int, std::size_t>{{-4, 1}, {-3, 1}, {-2, 1}});
    for (unsigned p : {2u, 3u, 5u, 7u}) {
        const auto r1 = pushout_rank_check(p, 1);
        CHECK(r1.pass);
        CHECK(r1.left_kernel.empty());
        for (int n = 1; n <= 8; ++n)
            CHECK(pushout_rank_check(p, n).pass);
    }
}

TEST_CASE("moore spectrum identification")
{
    for (unsigned p : {2u, 3u, 5u}) {
        const auto r = moore_identification(p);
        CAPTURE(p);
        CHECK(r.pass);
        CHECK(r.moore_mod_p == std::map<int, std::size_t>{{-1, 1}, {0, 1}});
    }
    const auto r3 = moore_identification(3);
    CHECK(r3.projection.at("Q^0") == "iota^p");
    CHECK(r3.projection.at("betaQ^0") == "0");
    CHECK(stunted_sq(-1, 0, 1).get(1, 0));
}

TEST_CASE("transfer cofiber")
{
    const auto r = transfer_cofiber_check(3, Window{-2, 10});
    CHECK(r.pass);
    REQUIRE(r.difference.size() == 1);
    CHECK(class_label(r.difference[0]) == "betaQ^0");
    CHECK(r.difference[0].degree == -1);
    const auto r2 = transfer_cofiber_check(2, Window{-2, 10});
    CHECK(r2.pass);
    CHECK(r2.difference == std::vector<DLClass>{{ClassKind::Cell, -1, -1}});
    const auto r5 = transfer_cofiber_check(5, Window{-2, 40});
    CHECK(r5.pass);
    CHECK(r5.difference.size() == 1);
    for (const auto& [d, k] : degree_counts(r5.bottom))
        CHECK(k == 1);
}
