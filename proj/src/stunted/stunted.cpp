#include "entriv/stunted/stunted.hpp"

#include "entriv/error.hpp"
#include "entriv/extpow/extpow.hpp"

#include <string>

namespace entriv {

void require_prime(unsigned p)
{
    if (p < 2)
        throw InvalidInput("prime must be at least 2");
    for (unsigned q = 2; q * q <= p; ++q)
        if (p % q == 0)
            throw InvalidInput(std::to_string(p) + " is not prime");
}

bool binomial_mod2(long j, long k)
{
    if (k < 0)
        return false;
    // C(x, k) mod 2 only depends on x mod 2^m once 2^m > k.
    unsigned long mask = 1;
    while (mask <= static_cast<unsigned long>(k))
        mask <<= 1;
    const unsigned long jm = static_cast<unsigned long>(j) & (mask - 1);
    return (jm & static_cast<unsigned long>(k)) == static_cast<unsigned long>(k);
}

Gf2Matrix stunted_sq(int a, int b, int k)
{
    if (a > b)
        throw InvalidInput("stunted range needs a <= b");
    if (k < 0)
        throw InvalidInput("Sq^k needs k >= 0");
    const auto cells = static_cast<std::size_t>(b - a + 1);
    Gf2Matrix m(cells, cells);
    for (int j = a; j + k <= b; ++j)
        if (binomial_mod2(j, k))
            m.set(static_cast<std::size_t>(j + k - a), static_cast<std::size_t>(j - a), true);
    return m;
}

ChainComplex stunted_cell_complex(int a, int b)
{
    if (a > b)
        throw InvalidInput("stunted range needs a <= b");
    std::map<int, std::size_t> ranks;
    std::map<int, IntMatrix> diffs;
    for (int j = a; j <= b; ++j) {
        ranks[j] = 1;
        if (j > a) {
            IntMatrix d(1, 1);
            d(0, 0) = (j % 2 == 0) ? 2 : 0;
            diffs.emplace(j, std::move(d));
        }
    }
    return ChainComplex(ranks, diffs);
}

GradedAbelianGroup stunted_integral_homology(int a, int b) { return homology(stunted_cell_complex(a, b)); }

int ku_exponent(int n) { return n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2; }

ExactTriple ku_ses(unsigned p, int n)
{
    require_prime(p);
    if (n < 2)
        throw InvalidInput("ku-ses needs n >= 2");
    ExactTriple t;
    t.p = p;
    t.n = n;
    t.k = ku_exponent(n);
    t.middle_torsion = ipow(Integer(p), static_cast<unsigned long>(t.k));
    t.right_order = t.middle_torsion * p;
    t.theta_bar = Integer(1) % t.middle_torsion;

    // Cokernel of Z -> Z + Z/p^k, presented on Z^2 with relation columns
    // (p, theta) and (0, p^k).
    t.presentation = IntMatrix(2, 2);
    t.presentation(0, 0) = p;
    t.presentation(1, 0) = t.theta_bar;
    t.presentation(1, 1) = t.middle_torsion;
    t.certificate = smith_normal_form(t.presentation);

    // Injective: the free coordinate of the image of 1 is p != 0.
    t.injective = t.presentation(0, 0) != 0;
    t.cokernel.free = 2 - t.certificate.rank();
    t.cokernel.torsion = t.certificate.invariant_factors();
    const bool theta_generates = t.k == 0 || gcd(t.theta_bar, Integer(p)) == 1;
    t.pass = t.injective && theta_generates && verify_smith_form(t.presentation, t.certificate) &&
             t.cokernel == AbelianGroup{0, {t.right_order}} && t.right_order / t.middle_torsion == p;
    return t;
}

NilpotenceWitness nilpotence_witness(unsigned p, int n)
{
    require_prime(p);
    if (n < 1)
        throw InvalidInput("witness needs n >= 1");
    NilpotenceWitness w;
    if (n == 1) {
        w.which = WitnessCase::Vacuous;
        w.reason = "n=1: the f-term has contractible domain, nothing to detect";
        return w;
    }
    w.k = ku_exponent(n);
    if (n == 2) {
        w.which = WitnessCase::Nishida;
        w.reason = "k=0: Z/p^0 = 0 carries no K(1) information; smash-nilpotent by Nishida's theorem";
        return w;
    }
    const auto triple = ku_ses(p, n);
    w.which = WitnessCase::K1Detection;
    w.detected_non_nilpotent = triple.pass && w.k >= 1;
    w.reason = "k=" + std::to_string(w.k) + " ≥ 1: exactness of 0 -> Z -> Z + Z/" + std::to_string(p) + "^" +
               std::to_string(w.k) + " -> Z/" + std::to_string(p) + "^" + std::to_string(w.k + 1) +
               " -> 0 makes theta-bar a generator of Z/" + std::to_string(p) + "^" + std::to_string(w.k) +
               ", nonzero mod " + std::to_string(p) + ", so the map is detected in K(1)-local K-theory";
    return w;
}

Integer adams_theta(int n, unsigned p)
{
    require_prime(p);
    if (n < 1)
        throw InvalidInput("theta needs n >= 1");
    // psi^p(beta^n) = p^n beta^n and (beta^n)^p = 0 in reduced K-theory.
    const Integer psi = ipow(Integer(p), static_cast<unsigned long>(n));
    const Integer power = 0;
    Integer diff = psi - power;
    if (!mpz_divisible_ui_p(diff.get_mpz_t(), p))
        throw Error("psi^p - x^p is not divisible by p");
    return diff / p;
}

UnitRelation unit_relation(unsigned p, int n)
{
    require_prime(p);
    if (n < 1)
        throw InvalidInput("unit relation needs n >= 1");
    UnitRelation u;
    u.p = p;
    u.n = n;
    // The f-term lives on the cofiber of the low-degree classes; it is empty
    // exactly when there are no s <= -1 classes.
    const auto low = verification_basis(p, n, Family::EnMinus1, default_window(p, n));
    u.f_domain_contractible = low.classes.empty();
    if (u.f_domain_contractible) {
        u.relation = "1 = " + std::to_string(p) + "x";
        return u;
    }
    int top = low.classes.front().degree;
    for (const auto& c : low.classes)
        top = std::max(top, c.degree);
    u.f_domain_top_degree = top + 1;
    u.f_domain_coconnected = u.f_domain_top_degree < 0;
    u.has_f_term = true;
    const auto w = nilpotence_witness(p, n);
    u.theta_smash_nilpotent = w.which == WitnessCase::Nishida;
    u.theta_detected = w.detected_non_nilpotent;
    u.relation = "1 = " + std::to_string(p) + "x + f*theta_" + std::to_string(n);
    return u;
}

std::string witness_case_name(WitnessCase c)
{
    switch (c) {
    case WitnessCase::Vacuous:
        return "vacuous";
    case WitnessCase::Nishida:
        return "nishida";
    case WitnessCase::K1Detection:
        return "k1-detection";
    }
    return "?";
}

nlohmann::json gf2_to_json(const Gf2Matrix& m)
{
    auto rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m.get(r, c) ? 1 : 0);
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json to_json_value(const ExactTriple& t)
{
    const std::string ps = std::to_string(t.p);
    return {{"prime", t.p},
            {"n", t.n},
            {"k", t.k},
            {"sequence", "0 -> Z -> Z + Z/" + ps + "^" + std::to_string(t.k) + " -> Z/" + ps + "^" +
                             std::to_string(t.k + 1) + " -> 0"},
            {"map_in", {integer_to_json(Integer(t.p)), integer_to_json(t.theta_bar)}},
            {"theta_bar_normalization", "theta-bar = 1 in Z/p^k"},
            {"presentation", to_json_value(t.presentation)},
            {"snf", to_json_value(t.certificate)},
            {"injective", t.injective},
            {"cokernel", to_json_value(t.cokernel)},
            {"pass", t.pass}};
}

nlohmann::json to_json_value(const NilpotenceWitness& w)
{
    return {{"value", w.detected_non_nilpotent}, {"case", witness_case_name(w.which)}, {"k", w.k}, {"reason", w.reason}};
}

nlohmann::json to_json_value(const UnitRelation& u)
{
    nlohmann::json j{{"prime", u.p},
                     {"n", u.n},
                     {"relation", u.relation},
                     {"has_f_term", u.has_f_term},
                     {"f_domain_contractible", u.f_domain_contractible}};
    if (u.has_f_term) {
        j["f_domain_top_degree"] = u.f_domain_top_degree;
        j["f_domain_coconnected"] = u.f_domain_coconnected;
        j["theta_smash_nilpotent"] = u.theta_smash_nilpotent;
        j["theta_detected_in_k1"] = u.theta_detected;
    }
    return j;
}

} // namespace entriv
