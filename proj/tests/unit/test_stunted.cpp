#include "entriv/error.hpp"
#include "entriv/stunted/stunted.hpp"

#include <doctest.h>

using namespace entriv;

namespace {

// Exact binomial with the generalized definition for negative top entries,
// reduced mod 2.
bool binomial_mod2_exact(long j, long k)
{
    Integer num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= Integer(j - i);
        den *= Integer(i + 1);
    }
    const Integer c = num / den;
    return mpz_odd_p(c.get_mpz_t());
}

} // namespace

TEST_CASE("binomials mod 2 agree with exact binomials, negative tops included")
{
    for (long j = -40; j <= 40; ++j)
        for (long k = 0; k <= 12; ++k) {
            CAPTURE(j);
            CAPTURE(k);
            CHECK(binomial_mod2(j, k) == binomial_mod2_exact(j, k));
        }
    for (long k = 0; k <= 20; ++k)
        CHECK(binomial_mod2(-1, k));
}

TEST_CASE("steenrod squares on stunted projective spaces")
{
    const auto sq1 = stunted_sq(-1, 0, 1);
    CHECK(sq1.get(1, 0));
    for (int j = -6; j <= 6; j += 2)
        CHECK(stunted_sq(j, j + 1, 1).is_zero());
    const auto sq2 = stunted_sq(2, 5, 2);
    CHECK(sq2.get(2, 0)); // x^2 -> x^4
    CHECK(sq2.get(3, 1)); // x^3 -> x^5
    // Sq^1 Sq^1 = 0 on every range.
    for (int a = -8; a <= 4; ++a)
        for (int b = a; b <= a + 8; ++b) {
            const auto s = stunted_sq(a, b, 1);
            CHECK((s * s).is_zero());
        }
    // Adem relation Sq^1 Sq^2 = Sq^3.
    for (int a = -8; a <= 2; ++a)
        CHECK(stunted_sq(a, a + 10, 1) * stunted_sq(a, a + 10, 2) == stunted_sq(a, a + 10, 3));
    CHECK(stunted_sq(0, 5, 0) == [] {
        Gf2Matrix id(6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            id.set(i, i, true);
        return id;
    }());
}

TEST_CASE("integral homology of stunted projective spaces")
{
    const auto moore = stunted_integral_homology(-1, 0);
    CHECK(moore.at(-1) == AbelianGroup{0, {2}});
    CHECK(moore.at(0).is_zero());
    CHECK(stunted_integral_homology(3, 3).at(3) == AbelianGroup{1, {}});
    const auto rp2 = stunted_integral_homology(1, 2);
    CHECK(rp2.at(1) == AbelianGroup{0, {2}});
    CHECK(rp2.at(2).is_zero());
    // Mod 2 the differentials vanish, so there is one class per cell.
    for (int a = -6; a <= 3; ++a)
        for (int b = a; b <= a + 7; ++b) {
            const auto h2 = homology(stunted_cell_complex(a, b), Coefficients::field(2));
            for (int j = a; j <= b; ++j)
                CHECK(h2.at(j).free == 1);
            // Universal coefficients from the integral answer.
            const auto hz = stunted_integral_homology(a, b);
            for (int j = a; j <= b; ++j)
                CHECK(hz.at(j).free + hz.at(j).torsion.size() + hz.at(j - 1).torsion.size() == 1);
        }
}

TEST_CASE("ku exact sequences")
{
    const auto t = ku_ses(2, 3);
    CHECK(t.k == 1);
    CHECK(t.presentation == IntMatrix::from_rows({{2, 0}, {1, 2}}));
    CHECK(t.cokernel == AbelianGroup{0, {4}});
    CHECK(t.pass);
    const auto t2 = ku_ses(2, 2);
    CHECK(t2.k == 0);
    CHECK(t2.cokernel == AbelianGroup{0, {2}});
    CHECK(t2.pass);
    const auto t3 = ku_ses(3, 5);
    CHECK(t3.k == 2);
    CHECK(t3.cokernel == AbelianGroup{0, {27}});
    CHECK_THROWS_AS(ku_ses(2, 1), InvalidInput);
    CHECK_THROWS_AS(ku_ses(4, 3), InvalidInput);
    for (unsigned p : {2u, 3u, 5u})
        for (int n = 2; n <= 12; ++n) {
            const auto s = ku_ses(p, n);
            CHECK(s.pass);
            CHECK(s.k == (n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2));
            CHECK(s.right_order / s.middle_torsion == p);
            CHECK(verify_smith_form(s.presentation, s.certificate));
        }
    // k steps up exactly when n crosses an odd value.
    for (int n = 2; n < 12; ++n)
        CHECK(ku_exponent(n + 1) - ku_exponent(n) == ((n + 1) % 2 == 1 ? 1 : 0));
}

TEST_CASE("nilpotence witness")
{
    CHECK(!nilpotence_witness(2, 2).detected_non_nilpotent);
    CHECK(nilpotence_witness(2, 2).which == WitnessCase::Nishida);
    const auto w = nilpotence_witness(2, 3);
    CHECK(w.detected_non_nilpotent);
    CHECK(w.reason.rfind("k=1 ≥ 1", 0) == 0);
    CHECK(nilpotence_witness(5, 3).detected_non_nilpotent);
    CHECK(nilpotence_witness(3, 1).which == WitnessCase::Vacuous);
    for (unsigned p : {2u, 3u, 5u})
        for (int n = 2; n <= 12; ++n)
            CHECK(nilpotence_witness(p, n).detected_non_nilpotent == (n >= 3));
}

TEST_CASE("adams theta")
{
    CHECK(adams_theta(1, 7) == 1);
    CHECK(adams_theta(2, 2) == 2);
    CHECK(adams_theta(4, 3) == 27);
    for (unsigned p : {2u, 3u, 5u})
        for (int n = 1; n <= 10; ++n) {
            CHECK(adams_theta(n, p) == ipow(Integer(p), static_cast<unsigned long>(n - 1)));
            CHECK(adams_theta(n, p) * p == ipow(Integer(p), static_cast<unsigned long>(n)));
        }
}

TEST_CASE("unit relation")
{
    const auto u1 = unit_relation(3, 1);
    CHECK(!u1.has_f_term);
    CHECK(u1.f_domain_contractible);
    CHECK(u1.relation == "1 = 3x");
    const auto u2 = unit_relation(2, 2);
    CHECK(u2.has_f_term);
    CHECK(u2.theta_smash_nilpotent);
    const auto u3 = unit_relation(5, 3);
    CHECK(u3.theta_detected);
    CHECK(u3.f_domain_coconnected);
    CHECK(u3.f_domain_top_degree == 3 - 2 * 5);
}
