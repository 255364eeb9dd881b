// Acceptance gate: one timed PASS/FAIL line per criterion, nonzero exit if any fails.
#include "cli/cli.hpp"
#include "support/random_symseq.hpp"

#include "entriv/core/chain_complex.hpp"
#include "entriv/core/smith.hpp"
#include "entriv/euler/euler.hpp"
#include "entriv/extpow/extpow.hpp"
#include "entriv/hochschild/hochschild.hpp"
#include "entriv/rep/wreath.hpp"
#include "entriv/steenrod/cochains.hpp"
#include "entriv/stunted/stunted.hpp"
#include "entriv/symseq/symseq.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace entriv;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds; // 0: untimed
    std::function<Outcome()> body;
};

std::string tag(unsigned p, int n) { return "p=" + std::to_string(p) + " n=" + std::to_string(n); }

Outcome extpow_sequences()
{
    Outcome o;
    std::size_t rows = 0;
    for (unsigned p : {2u, 3u, 5u, 7u})
        for (int n = 1; n <= 8; ++n)
            for (auto which : {Sequence::First, Sequence::Second}) {
                const auto r = verify_ses(p, n, which);
                const std::string where = tag(p, n) + (which == Sequence::First ? " first" : " second");
                o.require(r.pass, "verify_ses fails at " + where);
                for (const auto& [d, row] : r.check.degrees) {
                    o.require(row.a + row.c == row.b, "dimension not additive at " + where + " degree " +
                                                          std::to_string(d));
                    ++rows;
                }
            }
    if (o.ok)
        o.detail = std::to_string(rows) + " degree rows additive";
    return o;
}

Outcome extpow_pushout()
{
    Outcome o;
    for (unsigned p : {2u, 3u, 5u, 7u})
        for (int n = 1; n <= 8; ++n) {
            const auto r = pushout_rank_check(p, n);
            o.require(r.pass && r.kernels_equal && r.left_kernel == r.right_kernel, "pushout fails at " + tag(p, n));
        }
    if (o.ok)
        o.detail = "32 squares";
    return o;
}

Outcome moore_transfer()
{
    Outcome o;
    for (unsigned p : {2u, 3u, 5u}) {
        const auto m = moore_identification(p);
        o.require(m.pass && m.homology_matches && m.basis_is_two_cells,
                  "Moore identification fails at p=" + std::to_string(p));
        o.require(transfer_cofiber_check(p).pass, "transfer cofiber fails at p=" + std::to_string(p));
    }
    return o;
}

Outcome ku_sequences()
{
    Outcome o;
    for (unsigned p : {2u, 3u, 5u}) {
        for (int n = 2; n <= 12; ++n) {
            const auto t = ku_ses(p, n);
            const int k = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
            Integer pk, pk1;
            mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(k));
            mpz_ui_pow_ui(pk1.get_mpz_t(), p, static_cast<unsigned long>(k + 1));
            o.require(t.pass && t.injective, "ku_ses fails at " + tag(p, n));
            o.require(t.k == k, "wrong exponent at " + tag(p, n));
            o.require(t.middle_torsion == pk && t.right_order == pk1, "wrong orders at " + tag(p, n));
            o.require(t.cokernel == AbelianGroup{0, {pk1}}, "cokernel is not Z/p^(k+1) at " + tag(p, n));
            o.require(verify_smith_form(t.presentation, t.certificate), "bad Smith certificate at " + tag(p, n));
        }
        for (int n = 1; n <= 12; ++n)
            o.require(nilpotence_witness(p, n).detected_non_nilpotent == (n >= 3),
                      "witness disagrees with n >= 3 at " + tag(p, n));
    }
    return o;
}

Outcome adams()
{
    Outcome o;
    for (unsigned p : {2u, 3u, 5u})
        for (int n = 1; n <= 10; ++n) {
            Integer expected;
            mpz_ui_pow_ui(expected.get_mpz_t(), p, static_cast<unsigned long>(n - 1));
            o.require(adams_theta(n, p) == expected, "theta mismatch at " + tag(p, n));
        }
    return o;
}

Cochain random_cochain(Rng& rng, const SimplicialSet& x, int d)
{
    Cochain c = zero_cochain(x, d);
    for (auto& v : c.values)
        v = rng.coin() ? 1 : 0;
    return c;
}

Outcome steenrod()
{
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        const auto w = triviality_witness(n);
        o.require(w.generator_nonzero && w.sq0_is_generator && w.pass,
                  "Sq^0 is not the generator on S^" + std::to_string(n));
    }
    std::vector<std::pair<std::string, SimplicialSet>> models{{"S1", sphere_model(1)},
                                                              {"S2", sphere_model(2)},
                                                              {"S3", sphere_model(3)},
                                                              {"RP2", rp2_model()},
                                                              {"D3", standard_simplex(3)}};
    Rng rng(2024);
    for (const auto& [name, x] : models) {
        const int top = x.dimension();
        for (int trial = 0; trial < 1000 && o.ok; ++trial) {
            const int p = static_cast<int>(rng.uniform(0, top));
            const int q = static_cast<int>(rng.uniform(0, top));
            const int i = static_cast<int>(rng.uniform(0, std::min(p, q)));
            const Cochain a = random_cochain(rng, x, p);
            const Cochain b = random_cochain(rng, x, q);
            Cochain rhs = cup_i(x, a, coboundary(x, b), i) + cup_i(x, coboundary(x, a), b, i);
            if (i > 0)
                rhs = rhs + cup_i(x, a, b, i - 1) + cup_i(x, b, a, i - 1);
            o.require(coboundary(x, cup_i(x, a, b, i)) == rhs, "coboundary identity fails on " + name);
        }
    }
    if (o.ok)
        o.detail = "5 models x 1000 cochain pairs";
    return o;
}

using Dims = std::map<int, std::map<int, std::size_t>>;

Dims dims(const SymSeq& s)
{
    Dims out;
    for (const auto& [n, byDegree] : s.components())
        for (const auto& [d, m] : byDegree)
            out[n][d] = m.dim();
    return out;
}

bool same(const SymSeq& a, const SymSeq& b) { return dims(a) == dims(b) && characters(a) == characters(b); }

Outcome symseq()
{
    Outcome o;
    const int trunc = 4;
    const auto unit = unit_sequence(trunc);
    Rng rng(99);
    for (int trial = 0; trial < 100 && o.ok; ++trial) {
        const auto a = oracle::random_symseq(rng, trunc, -2, 2, 4);
        const auto b = oracle::random_symseq(rng, trunc, -2, 2, 4);
        const auto c = oracle::random_symseq(rng, trunc, -2, 2, 4);
        o.require(same(compose(unit, a, trunc), a) && same(compose(a, unit, trunc), a),
                  "unit law fails in trial " + std::to_string(trial));
        o.require(same(compose(compose(a, b, trunc), c, trunc), compose(a, compose(b, c, trunc), trunc)),
                  "associativity fails in trial " + std::to_string(trial));
        if (trial < 20)
            o.require(monoidality_report(a, b, trunc).pass, "monoidality fails in trial " + std::to_string(trial));
    }
    SymSeq com(trunc), sign(trunc);
    for (int n = 1; n <= trunc; ++n) {
        com.set(n, 0, SignedPermModule::trivial(n));
        sign.set(n, n - 1, n == 1 ? SignedPermModule::trivial(1) : SignedPermModule::sign_rep(n));
    }
    o.require(set_partitions(3).size() == 5 && set_partitions(4).size() == 15, "set partitions are not Bell");
    const auto cc = compose(com, com, trunc);
    o.require(cc.dim(3, 0) == 5 && cc.dim(4, 0) == 15, "Com o Com summand count is not Bell");
    o.require(raw_dimension_sum(com, com, 3, 0) == 5 && raw_dimension_sum(com, com, 4, 0) == 15,
              "raw summand count is not Bell");
    o.require(monoidality_report(com, sign, trunc).pass && monoidality_report(sign, com, trunc).pass,
              "monoidality fails on Com and its suspension");
    return o;
}

Outcome wreath()
{
    Outcome o;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const auto r = wreath_decomposition_check(a, b);
            o.require(r.pass && r.restricted_character == r.decomposed_character,
                      "character identity fails at a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    return o;
}

Outcome euler()
{
    Outcome o;
    std::uint64_t total = 0;
    std::uint64_t seed = 1;
    for (int m = 1; m <= 4; ++m)
        for (int t = 2; t <= 6; ++t) {
            const auto c = nullhomotopy_certificate(m, t, 10000, seed++);
            total += c.samples;
            o.require(c.pass && c.failures == 0,
                      "section fails at m=" + std::to_string(m) + " t=" + std::to_string(t));
        }
    if (o.ok)
        o.detail = std::to_string(total) + " exact samples, 0 failures";
    return o;
}

Outcome hochschild()
{
    Outcome o;
    for (const char* ring : {"Z", "F2", "F3", "Q"})
        for (int n = 1; n <= 4; ++n) {
            const auto r = hh_report(BaseRing::parse(ring), n, 6);
            const std::string where = std::string(ring) + " n=" + std::to_string(n);
            o.require(r.agree && r.bar == r.small.hh, "bar and small resolution differ over " + where);
            o.require(r.small.resolution_exact, "resolution not exact over " + where);
            o.require(r.hh0_is_algebra, "HH_0 is not the algebra over " + where);
            o.require(r.pass, "report fails over " + where);
        }
    return o;
}

Outcome formality()
{
    Outcome o;
    Rng rng(4242);
    for (int i = 0; i < 100; ++i) {
        const auto c = random_chain_complex(rng, 4, 6, 9);
        const auto s = formality_splitting(c);
        o.require(s.certified, "minimal model not certified for complex " + std::to_string(i));
        o.require(homology(s.minimal) == homology(c), "minimal model homology differs for complex " +
                                                          std::to_string(i));
    }
    return o;
}

Outcome determinism()
{
    Outcome o;
    const std::vector<std::string> args{"batch", "--manifest", ENTRIV_ACCEPTANCE_MANIFEST, "--jobs", "4"};
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::run(args, out1, err1);
    const int c2 = cli::run(args, out2, err2);
    o.require(c1 == cli::kExitPass && c2 == cli::kExitPass, "manifest does not pass: " + err1.str());
    o.require(out1.str() == out2.str(), "reports differ between runs");
    if (o.ok)
        o.detail = std::to_string(out1.str().size()) + " identical bytes";
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "extended-power cofiber sequences", 5, extpow_sequences},
        {2, "pushout square kernels", 1, extpow_pushout},
        {3, "Moore spectrum and transfer identifications", 0, moore_transfer},
        {4, "KU exact sequences and nilpotence witness", 1, ku_sequences},
        {5, "Adams operation on beta^n", 0, adams},
        {6, "Sq^0 on spheres and cup-i coboundary identity", 10, steenrod},
        {7, "symmetric-sequence composition laws", 30, symseq},
        {8, "wreath product character identity", 0, wreath},
        {9, "Euler section equivariance and nonvanishing", 20, euler},
        {10, "Hochschild bar vs small resolution", 60, hochschild},
        {11, "formality splitting of random complexes", 0, formality},
        {12, "batch determinism", 0, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
            o.ok = false;
            o.detail = "over time budget";
        }
        char timing[64];
        if (c.budget_seconds > 0)
            std::snprintf(timing, sizeof timing, "%.3fs / %.0fs", secs, c.budget_seconds);
        else
            std::snprintf(timing, sizeof timing, "%.3fs", secs);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (c.id < 10 ? " " : "") << c.id << "  " << c.title << "  ["
                  << timing << "]" << (o.detail.empty() ? "" : "  " + o.detail) << std::endl;
        failed += o.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
