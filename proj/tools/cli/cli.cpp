#include "cli.hpp"

#include "entriv/core/chain_complex.hpp"
#include "entriv/core/smith.hpp"
#include "entriv/error.hpp"
#include "entriv/euler/euler.hpp"
#include "entriv/extpow/extpow.hpp"
#include "entriv/hochschild/hochschild.hpp"
#include "entriv/rep/wreath.hpp"
#include "entriv/steenrod/cochains.hpp"
#include "entriv/stunted/stunted.hpp"
#include "entriv/symseq/symseq.hpp"
#include "entriv/util/rng.hpp"

#include <cctype>
#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

namespace entriv::cli {

namespace {

struct Outcome {
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json payload = nlohmann::json::object();
    bool pass = false;
    std::string certifies;
};

struct Options {
    std::string format = "json";
    std::string out;
    std::string golden;

    unsigned prime = 0;
    int n = 0;
    std::string family = "einf";
    std::string window;
    std::string which;
    std::string range;
    int k = 0;
    int sphere = 0;
    std::vector<std::string> inputs;
    std::string input;
    std::string with;
    int truncate = 0;
    std::string ring;
    int smax = 0;
    int m = 0;
    int t = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool float_mode = false;
    int a = 0;
    int b = 0;
    int count = 0;
    int top = 4;
    int max_rank = 6;
    long bound = 9;
    std::string manifest;
    int jobs = 0;
};

// Reports name files without their directory so they do not depend on the checkout location.
std::string file_label(const std::string& path) { return std::filesystem::path(path).filename().string(); }

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot read '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::pair<int, int> parse_range(const std::string& text, const std::string& flag)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw InvalidInput(flag + " expects LO:HI, got '" + text + "'");
    int lo = 0, hi = 0;
    try {
        std::size_t used = 0;
        lo = std::stoi(text.substr(0, colon), &used);
        if (used != colon)
            throw std::invalid_argument("");
        const auto rest = text.substr(colon + 1);
        hi = std::stoi(rest, &used);
        if (used != rest.size())
            throw std::invalid_argument("");
    } catch (const std::logic_error&) {
        throw InvalidInput(flag + " expects integers LO:HI, got '" + text + "'");
    }
    if (lo > hi)
        throw InvalidInput(flag + " bounds are inverted: " + text);
    return {lo, hi};
}

std::optional<Window> window_option(const Options& o)
{
    if (o.window.empty())
        return std::nullopt;
    const auto [lo, hi] = parse_range(o.window, "--window");
    return Window{lo, hi};
}

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw InvalidInput(message);
}

void require_prime_flag(const Options& o)
{
    require(o.prime != 0, "--prime is required");
    require_prime(o.prime);
}

nlohmann::json window_json(const Window& w) { return {{"lo", w.lo}, {"hi", w.hi}}; }

Outcome extpow_basis(const Options& o)
{
    require_prime_flag(o);
    require(o.n >= 1, "--n must be at least 1");
    const Family fam = family_from_string(o.family);
    const Window w = window_option(o).value_or(default_window(o.prime, o.n));
    Outcome r;
    r.parameters = {{"prime", o.prime}, {"n", o.n}, {"family", family_name(fam)}, {"window", window_json(w)}};
    const DLBasis basis = verification_basis(o.prime, o.n, fam, w);
    const DLBasis classes = dl_classes(o.prime, o.n, fam, w);
    bool consistent = true;
    if (o.prime == 2) {
        // classes and stunted cells must occupy the same degrees
        std::vector<int> da, db;
        for (const auto& c : basis.classes)
            da.push_back(c.degree);
        for (const auto& c : classes.classes)
            db.push_back(c.degree);
        consistent = da == db;
    } else {
        consistent = to_json_value(basis) == to_json_value(classes);
    }
    r.payload = {{"basis", to_json_value(basis)}, {"classes", to_json_value(classes)}, {"consistent", consistent}};
    r.pass = consistent;
    r.certifies = "Mod-p homology basis of the weight-p extended power, with the p = 2 cell model matching the "
                  "operation classes degree by degree.";
    return r;
}

Outcome extpow_ses(const Options& o)
{
    require_prime_flag(o);
    require(o.n >= 1, "--n must be at least 1");
    require(o.which == "first" || o.which == "second", "--which must be first or second");
    const auto report =
        verify_ses(o.prime, o.n, o.which == "first" ? Sequence::First : Sequence::Second, window_option(o));
    Outcome r;
    r.parameters = {{"prime", o.prime}, {"n", o.n}, {"which", o.which}, {"window", window_json(report.window)}};
    r.payload = to_json_value(report);
    r.pass = report.pass;
    r.certifies = "The extended-power cofiber sequence is short exact in mod-p homology in every degree of the window.";
    return r;
}

Outcome extpow_pushout(const Options& o)
{
    require_prime_flag(o);
    require(o.n >= 1, "--n must be at least 1");
    const auto report = pushout_rank_check(o.prime, o.n, window_option(o));
    Outcome r;
    r.parameters = {{"prime", o.prime}, {"n", o.n}, {"window", window_json(report.window)}};
    r.payload = to_json_value(report);
    r.pass = report.pass;
    r.certifies = "The two vertical maps of the extended-power square have equal kernels and the square's Euler "
                  "characteristic vanishes degreewise.";
    return r;
}

Outcome extpow_moore(const Options& o)
{
    require_prime_flag(o);
    const auto report = moore_identification(o.prime);
    Outcome r;
    r.parameters = {{"prime", o.prime}};
    r.payload = to_json_value(report);
    r.pass = report.pass;
    r.certifies = "The bottom E_2 extended power has the two-cell homology of the desuspended mod-p Moore spectrum, "
                  "joined by a Bockstein.";
    return r;
}

Outcome extpow_transfer(const Options& o)
{
    require_prime_flag(o);
    const auto report = transfer_cofiber_check(o.prime, window_option(o));
    Outcome r;
    r.parameters = {{"prime", o.prime}, {"window", window_json(report.window)}};
    r.payload = to_json_value(report);
    r.pass = report.pass;
    r.certifies = "The transfer cofiber basis is the difference of the E_infinity extended powers on S^-1 and S^0.";
    return r;
}

Outcome ku_ses_verb(const Options& o)
{
    require_prime_flag(o);
    require(o.n >= 2, "--n must be at least 2");
    const auto t = ku_ses(o.prime, o.n);
    Outcome r;
    r.parameters = {{"prime", o.prime}, {"n", o.n}};
    r.payload = to_json_value(t);
    r.pass = t.pass;
    r.certifies = "0 -> Z -> Z + Z/p^k -> Z/p^(k+1) -> 0 is exact, certified by a Smith normal form.";
    return r;
}

Outcome theta_verb(const Options& o)
{
    require_prime_flag(o);
    require(o.n >= 1, "--n must be at least 1");
    const Integer theta = adams_theta(o.n, o.prime);
    const Integer expected = ipow(Integer(o.prime), static_cast<unsigned long>(o.n - 1));
    const Integer psi = ipow(Integer(o.prime), static_cast<unsigned long>(o.n));
    Outcome r;
    r.parameters = {{"prime", o.prime}, {"n", o.n}};
    r.payload = {{"theta", integer_to_json(theta)},
                 {"expected", integer_to_json(expected)},
                 {"psi_eigenvalue", integer_to_json(psi)},
                 {"p_times_theta_is_psi", Integer(theta * o.prime) == psi}};
    r.pass = theta == expected && Integer(theta * o.prime) == psi;
    r.certifies = "theta acts on beta^n by p^(n-1), so that p * theta recovers the Adams eigenvalue p^n.";
    return r;
}

Outcome witness_verb(const Options& o)
{
    require_prime_flag(o);
    require(o.n >= 1, "--n must be at least 1");
    const auto w = nilpotence_witness(o.prime, o.n);
    Outcome r;
    r.parameters = {{"prime", o.prime}, {"n", o.n}};
    r.payload = to_json_value(w);
    r.pass = w.detected_non_nilpotent;
    r.certifies = "For n >= 3 the class theta_n is detected by K(1)-local K-theory and so is not smash nilpotent.";
    return r;
}

Outcome stunted_sq_verb(const Options& o)
{
    const auto [a, b] = parse_range(o.range, "--range");
    require(o.k >= 0, "--k must be nonnegative");
    const Gf2Matrix m = stunted_sq(a, b, o.k);
    Outcome r;
    r.parameters = {{"range", {{"lo", a}, {"hi", b}}}, {"k", o.k}};
    r.payload = {{"matrix", gf2_to_json(m)}};
    r.pass = true;
    if (o.k == 1) {
        const bool zero = (m * m).is_zero();
        r.payload["sq1_sq1_zero"] = zero;
        r.pass = zero;
    }
    r.certifies = "Steenrod squares on the cells of a stunted projective space, from binomial coefficients mod 2.";
    return r;
}

Outcome stunted_homology_verb(const Options& o)
{
    const auto [a, b] = parse_range(o.range, "--range");
    const auto h = stunted_integral_homology(a, b);
    const auto h2 = homology(stunted_cell_complex(a, b), Coefficients::field(2));
    // every cell survives mod 2
    bool cells = true;
    for (int j = a; j <= b; ++j)
        cells = cells && h2.at(j) == AbelianGroup{1, {}};
    Outcome r;
    r.parameters = {{"range", {{"lo", a}, {"hi", b}}}};
    r.payload = {{"integral", to_json_value(h)}, {"mod2", to_json_value(h2)}, {"mod2_matches_cells", cells}};
    r.pass = cells;
    r.certifies = "Integral homology of the stunted projective space from its cellular chains; mod 2 there is one "
                  "class per cell.";
    return r;
}

Outcome steenrod_sq_verb(const Options& o)
{
    require(o.sphere >= 1, "--sphere must be at least 1");
    require(o.k >= 0, "--k must be nonnegative");
    const auto x = sphere_model(o.sphere);
    const Cochain g{o.sphere, {1}};
    const auto s = sq(x, o.k, g);
    const bool expected_nonzero = o.k == 0;
    Outcome r;
    r.parameters = {{"sphere", o.sphere}, {"k", o.k}};
    r.payload = to_json_value(s);
    r.payload["equals_generator"] = o.k == 0 && cohomologous(x, s.representative, g);
    r.pass = expected_nonzero ? r.payload["equals_generator"].get<bool>() : s.zero_class;
    r.certifies = "Sq^k of the generator of H^n(S^n; F_2) computed from cup-i products: Sq^0 is the identity and "
                  "higher squares vanish.";
    return r;
}

Outcome steenrod_witness_verb(const Options& o)
{
    require(o.n >= 1, "--n must be at least 1");
    const auto w = triviality_witness(o.n);
    Outcome r;
    r.parameters = {{"n", o.n}};
    r.payload = to_json_value(w);
    r.pass = w.pass;
    r.certifies = "Sq^0 is nonzero on H^n(S^n; F_2) while it vanishes on a trivial square-zero algebra, so the "
                  "cochains on S^n are not E_(n+1)-trivial.";
    return r;
}

Outcome compose_verb(const Options& o)
{
    require(o.inputs.size() == 2, "--input takes two files");
    require(o.truncate >= 1, "--truncate must be at least 1");
    const SymSeq a = symseq_from_json(read_json_file(o.inputs[0]));
    const SymSeq b = symseq_from_json(read_json_file(o.inputs[1]));
    Outcome r;
    r.parameters = {{"inputs", {file_label(o.inputs[0]), file_label(o.inputs[1])}}, {"truncate", o.truncate}};
    const auto chars = compose_characters(a, b, o.truncate);
    r.payload["characters"] = to_json_value(chars);
    r.pass = true;
    bool monomial = true;
    for (const auto* s : {&a, &b})
        for (const auto& [arity, byd] : s->components())
            for (const auto& [d, mod] : byd)
                monomial = monomial && mod.is_monomial();
    if (o.truncate <= kMaxMaterializedArity && monomial) {
        const SymSeq c = compose(a, b, o.truncate);
        r.payload["result"] = to_json_value(c);
        r.payload["dimensions"] = dimension_table(c);
        const bool match = characters(c) == chars;
        r.payload["characters_match"] = match;
        r.pass = match;
    }
    r.certifies = "Composition product of symmetric sequences by set partitions with induced actions; the "
                  "materialized result has the characters predicted by the trace formula.";
    return r;
}

Outcome suspend_verb(const Options& o)
{
    require(!o.input.empty(), "--input is required");
    const SymSeq a = symseq_from_json(read_json_file(o.input));
    Outcome r;
    r.parameters = {{"input", file_label(o.input)}, {"k", o.k}};
    r.payload["result"] = to_json_value(suspend(a, o.k));
    r.pass = true;
    if (!o.with.empty()) {
        require(o.truncate >= 1, "--truncate is required with --with");
        const SymSeq b = symseq_from_json(read_json_file(o.with));
        const auto rep = monoidality_report(a, b, o.truncate);
        r.parameters["with"] = file_label(o.with);
        r.parameters["truncate"] = o.truncate;
        r.payload["monoidality"] = to_json_value(rep);
        r.pass = rep.pass;
    }
    r.certifies = "Operadic suspension shifts arity n by k(n-1) with a sign twist and commutes with the composition "
                  "product.";
    return r;
}

Outcome hh_verb(const Options& o)
{
    const BaseRing ring = BaseRing::parse(o.ring);
    require(o.n >= 1, "--n must be at least 1");
    require(o.smax >= 0, "--smax must be nonnegative");
    const auto rep = hh_report(ring, o.n, o.smax);
    Outcome r;
    r.parameters = {{"ring", ring.name()}, {"n", o.n}, {"smax", o.smax}};
    r.payload = to_json_value(rep);
    if (o.n >= 2)
        r.payload["loop_space"] = to_json_value(loop_space_table(o.n, ring, o.smax));
    r.pass = rep.pass;
    r.certifies = "Hochschild homology of R[x]/x^2 with |x| = -n agrees between the normalized bar complex and the "
                  "two-periodic resolution, and HH_0 is the algebra.";
    return r;
}

Outcome euler_verb(const Options& o)
{
    require(o.m >= 1, "--m must be at least 1");
    require(o.t >= 2, "--t must be at least 2");
    const auto cert = nullhomotopy_certificate(o.m, o.t, o.samples, o.seed, o.float_mode);
    Outcome r;
    r.parameters = {{"m", o.m}, {"t", o.t}, {"samples", o.samples}, {"seed", o.seed}, {"float", o.float_mode}};
    r.payload = to_json_value(cert);
    r.pass = cert.pass;
    r.certifies = "Centered coordinates give a nowhere-zero equivariant section of m copies of the reduced standard "
                  "representation over configuration space.";
    return r;
}

Outcome formality_verb(const Options& o)
{
    Outcome r;
    r.certifies = "Every bounded complex of free abelian groups splits as its homology plus two-term pieces, "
                  "certified by recomputing homology.";
    if (!o.input.empty()) {
        const auto c = chain_complex_from_json(read_json_file(o.input));
        const auto f = formality_splitting(c);
        r.parameters = {{"input", file_label(o.input)}};
        r.payload = {{"homology", to_json_value(homology(c))},
                     {"minimal", to_json_value(f.minimal)},
                     {"certified", f.certified}};
        r.pass = f.certified;
        return r;
    }
    require(o.count >= 0, "--random must be nonnegative");
    require(o.top >= 0 && o.max_rank >= 1 && o.bound >= 1, "--top, --max-rank and --bound must be positive");
    Rng rng(o.seed);
    std::size_t certified = 0;
    auto failures = nlohmann::json::array();
    for (int i = 0; i < o.count; ++i) {
        const auto c = random_chain_complex(rng, o.top, static_cast<std::size_t>(o.max_rank), o.bound);
        if (formality_splitting(c).certified)
            ++certified;
        else
            failures.push_back(i);
    }
    r.parameters = {{"random", o.count}, {"seed", o.seed}, {"top", o.top}, {"max_rank", o.max_rank},
                    {"bound", o.bound}};
    r.payload = {{"complexes", o.count}, {"certified", certified}, {"failures", failures}};
    r.pass = failures.empty();
    return r;
}

Outcome wreath_verb(const Options& o)
{
    require(o.a >= 1 && o.b >= 1, "--a and --b must be at least 1");
    const auto rep = wreath_decomposition_check(o.a, o.b, o.t > 0 ? std::optional<int>(o.t) : std::nullopt);
    Outcome r;
    r.parameters = {{"a", o.a}, {"b", o.b}};
    if (o.t > 0)
        r.parameters["t"] = o.t;
    r.payload = to_json_value(rep);
    r.pass = rep.pass;
    r.certifies = "Restricted to the wreath product, the reduced standard representation of Sigma_ab is the pullback "
                  "of rho_a plus Q^a tensor rho_b.";
    return r;
}

Outcome unit_relation_verb(const Options& o)
{
    require_prime_flag(o);
    require(o.n >= 1, "--n must be at least 1");
    const auto u = unit_relation(o.prime, o.n);
    Outcome r;
    r.parameters = {{"prime", o.prime}, {"n", o.n}};
    r.payload = to_json_value(u);
    r.pass = u.f_domain_contractible ? !u.has_f_term : (u.has_f_term && u.theta_smash_nilpotent != u.theta_detected);
    r.certifies = "Assumed E_(n+1)-triviality forces 1 = p x + f theta_n in pi_0; the f-term is absent when its "
                  "domain is contractible.";
    return r;
}

Outcome batch_verb(const Options& o);

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Verb {
    CLI::App* app;
    std::function<Outcome(const Options&)> handler;
};

void add_common(CLI::App* app, Options& o)
{
    app->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "md"}));
    app->add_option("--out", o.out, "write the report to this file");
    app->add_option("--golden", o.golden, "compare the payload with this JSON file");
}

CLI::App* leaf(CLI::App& parent, const std::string& name, const std::string& help, Options& o)
{
    auto* app = parent.add_subcommand(name, help);
    add_common(app, o);
    return app;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    try {
        return dispatch(args, out, err);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    if (const char* dir = std::getenv("ENTRIV_CACHE_DIR"); dir && *dir)
        install_snf_cache(dir);

    Options o;
    CLI::App app{"Exact certificates for extended powers, symmetric sequences, cochains and Hochschild homology",
                 "entriv"};
    app.require_subcommand(1);
    std::vector<Verb> verbs;

    auto* extpow = leaf(app, "extpow", "mod-p homology basis of an extended power", o);
    extpow->add_option("--prime", o.prime, "prime p");
    extpow->add_option("--n", o.n, "sphere dimension n")->check(CLI::PositiveNumber);
    extpow->add_option("--family", o.family, "en-1|en+1|einf|e2|einf-bottom|e1|einf-zero");
    extpow->add_option("--window", o.window, "degree window LO:HI");
    verbs.push_back({extpow, extpow_basis});
    {
        auto* ses = leaf(*extpow, "ses", "short exact sequence check", o);
        ses->add_option("--prime", o.prime)->required();
        ses->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
        ses->add_option("--which", o.which)->required()->check(CLI::IsMember({"first", "second"}));
        ses->add_option("--window", o.window);
        verbs.push_back({ses, extpow_ses});
        auto* pushout = leaf(*extpow, "pushout", "pushout kernel check", o);
        pushout->add_option("--prime", o.prime)->required();
        pushout->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
        pushout->add_option("--window", o.window);
        verbs.push_back({pushout, extpow_pushout});
        auto* moore = leaf(*extpow, "moore", "Moore spectrum identification", o);
        moore->add_option("--prime", o.prime)->required();
        verbs.push_back({moore, extpow_moore});
        auto* transfer = leaf(*extpow, "transfer", "transfer cofiber check", o);
        transfer->add_option("--prime", o.prime)->required();
        transfer->add_option("--window", o.window);
        verbs.push_back({transfer, extpow_transfer});
    }

    auto* ku = leaf(app, "ku-ses", "KU exact sequence certificate", o);
    ku->add_option("--prime", o.prime)->required();
    ku->add_option("--n", o.n)->required();
    verbs.push_back({ku, ku_ses_verb});

    auto* theta = leaf(app, "theta", "theta eigenvalue on beta^n", o);
    theta->add_option("--prime", o.prime)->required();
    theta->add_option("--n", o.n)->required();
    verbs.push_back({theta, theta_verb});

    auto* witness = leaf(app, "witness", "non-nilpotence witness for theta_n", o);
    witness->add_option("--prime", o.prime)->required();
    witness->add_option("--n", o.n)->required();
    verbs.push_back({witness, witness_verb});

    auto* stunted = app.add_subcommand("stunted", "stunted projective spaces");
    stunted->require_subcommand(1);
    {
        auto* s = leaf(*stunted, "sq", "Sq^k matrix on RP_a^b", o);
        s->add_option("--range", o.range, "A:B")->required();
        s->add_option("--k", o.k)->required();
        verbs.push_back({s, stunted_sq_verb});
        auto* h = leaf(*stunted, "homology", "integral homology of RP_a^b", o);
        h->add_option("--range", o.range, "A:B")->required();
        verbs.push_back({h, stunted_homology_verb});
    }

    auto* steenrod = app.add_subcommand("steenrod", "cochain-level Steenrod squares");
    steenrod->require_subcommand(1);
    {
        auto* s = leaf(*steenrod, "sq", "Sq^k on the generator of H^n(S^n)", o);
        s->add_option("--sphere", o.sphere)->required();
        s->add_option("--k", o.k)->required();
        verbs.push_back({s, steenrod_sq_verb});
        auto* w = leaf(*steenrod, "witness", "Sq^0 non-triviality witness", o);
        w->add_option("--n", o.n)->required();
        verbs.push_back({w, steenrod_witness_verb});
    }

    auto* compose = leaf(app, "compose", "composition product of symmetric sequences", o);
    compose->add_option("--input", o.inputs, "two symmetric sequence files")->required()->expected(2);
    compose->add_option("--truncate", o.truncate)->required();
    verbs.push_back({compose, compose_verb});

    auto* susp = leaf(app, "suspend", "operadic suspension", o);
    susp->add_option("--input", o.input)->required();
    susp->add_option("--k", o.k)->required();
    susp->add_option("--with", o.with, "second sequence for the monoidality check");
    susp->add_option("--truncate", o.truncate);
    verbs.push_back({susp, suspend_verb});

    auto* hh = leaf(app, "hh", "Hochschild homology of R[x]/x^2", o);
    hh->add_option("--ring", o.ring)->required();
    hh->add_option("--n", o.n)->required();
    hh->add_option("--smax", o.smax)->required();
    verbs.push_back({hh, hh_verb});

    auto* euler = leaf(app, "euler", "equivariant section certificate", o);
    euler->add_option("--m", o.m)->required();
    euler->add_option("--t", o.t)->required();
    euler->add_option("--samples", o.samples)->required();
    euler->add_option("--seed", o.seed)->required();
    euler->add_flag("--float", o.float_mode);
    verbs.push_back({euler, euler_verb});

    auto* formality = leaf(app, "formality", "minimal model of integral complexes", o);
    auto* fin = formality->add_option("--input", o.input, "chain complex file");
    auto* frand = formality->add_option("--random", o.count, "number of random complexes");
    fin->excludes(frand);
    formality->add_option("--seed", o.seed);
    formality->add_option("--top", o.top);
    formality->add_option("--max-rank", o.max_rank);
    formality->add_option("--bound", o.bound);
    verbs.push_back({formality, formality_verb});

    auto* wreath = leaf(app, "wreath", "wreath decomposition of rho_ab", o);
    wreath->add_option("--a", o.a)->required();
    wreath->add_option("--b", o.b)->required();
    wreath->add_option("--t", o.t, "size of T, must equal ab");
    verbs.push_back({wreath, wreath_verb});

    auto* unit = leaf(app, "unit-relation", "symbolic unit relation record", o);
    unit->add_option("--prime", o.prime)->required();
    unit->add_option("--n", o.n)->required();
    verbs.push_back({unit, unit_relation_verb});

    auto* batch = leaf(app, "batch", "run a manifest of commands", o);
    batch->add_option("--manifest", o.manifest)->required();
    batch->add_option("--jobs", o.jobs, "parallel workers (default: hardware threads)");
    verbs.push_back({batch, batch_verb});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    // The deepest parsed subcommand picks the handler.
    const Verb* chosen = nullptr;
    for (const auto& v : verbs)
        if (v.app->parsed() && (!chosen || v.app->get_parent() == chosen->app))
            chosen = &v;
    if (!chosen) {
        err << "error: choose a subcommand\n";
        return kExitUsage;
    }
    std::string verb_name = chosen->app->get_name();
    if (chosen->app->get_parent() != &app)
        verb_name = chosen->app->get_parent()->get_name() + " " + verb_name;

    nlohmann::json report;
    report["verb"] = verb_name;
    int code = kExitPass;
    try {
        Outcome r = chosen->handler(o);
        report["parameters"] = r.parameters;
        report["certifies"] = r.certifies;
        report["payload"] = r.payload;
        bool pass = r.pass;
        if (!o.golden.empty()) {
            const bool match = read_json_file(o.golden) == r.payload;
            report["golden"] = {{"file", std::filesystem::path(o.golden).filename().string()}, {"match", match}};
            pass = pass && match;
        }
        report["pass"] = pass;
        code = pass ? kExitPass : kExitFail;
    } catch (const LimitExceeded& e) {
        report["pass"] = false;
        report["error"] = std::string("limit exceeded: ") + e.what();
        code = kExitFail;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::string text = o.format == "md" ? render_markdown(report) : report.dump(2) + "\n";
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << o.out << "'\n";
            return kExitUsage;
        }
        file << text;
    }
    return code;
}

struct BatchEntry {
    std::vector<std::string> shown; // as written in the manifest
    std::vector<std::string> argv;  // file arguments resolved against the manifest directory
    int code = 0;
    std::string output;
    std::string diagnostics;
};

Outcome batch_verb(const Options& o)
{
    const nlohmann::json manifest = read_json_file(o.manifest);
    if (!manifest.is_array())
        throw InvalidInput("manifest must be a JSON list of commands");
    const auto base = std::filesystem::path(o.manifest).parent_path();
    std::vector<BatchEntry> entries;
    for (const auto& item : manifest) {
        BatchEntry e;
        const nlohmann::json* argv = &item;
        if (item.is_object()) {
            if (!item.contains("argv"))
                throw InvalidInput("manifest objects need an \"argv\" list");
            argv = &item["argv"];
        }
        if (!argv->is_array() || argv->empty())
            throw InvalidInput("each manifest command is a nonempty list of strings");
        for (const auto& a : *argv) {
            if (!a.is_string())
                throw InvalidInput("manifest arguments must be strings");
            e.argv.push_back(a.get<std::string>());
        }
        if (e.argv.front() == "batch")
            throw InvalidInput("manifests cannot nest batch commands");
        if (item.is_object() && item.contains("golden")) {
            if (!item["golden"].is_string())
                throw InvalidInput("\"golden\" must be a path");
            e.argv.push_back("--golden");
            e.argv.push_back(item["golden"].get<std::string>());
        }
        e.shown = e.argv;
        bool file_arg = false;
        for (auto& a : e.argv) {
            if (a.rfind("-", 0) == 0 && !std::isdigit(static_cast<unsigned char>(a.size() > 1 ? a[1] : 'x'))) {
                file_arg = a == "--input" || a == "--with" || a == "--golden";
                continue;
            }
            if (file_arg && std::filesystem::path(a).is_relative())
                a = (base / a).string();
            if (file_arg && e.argv.front() != "compose")
                file_arg = false;
        }
        entries.push_back(std::move(e));
    }

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers =
        std::min<std::size_t>(entries.size(), o.jobs > 0 ? static_cast<std::size_t>(o.jobs) : hw);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
            std::ostringstream out, err;
            entries[i].code = run(entries[i].argv, out, err);
            entries[i].output = out.str();
            entries[i].diagnostics = err.str();
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (auto& t : pool)
        t.join();

    Outcome r;
    r.parameters = {{"manifest", std::filesystem::path(o.manifest).filename().string()}};
    auto results = nlohmann::json::array();
    std::size_t passed = 0;
    for (const auto& e : entries) {
        nlohmann::json row = {{"argv", e.shown}, {"exit_code", e.code}};
        try {
            row["report"] = nlohmann::json::parse(e.output);
        } catch (const nlohmann::json::exception&) {
            row["report"] = e.output;
        }
        if (!e.diagnostics.empty())
            row["diagnostics"] = e.diagnostics;
        passed += e.code == kExitPass ? 1 : 0;
        results.push_back(std::move(row));
    }
    r.payload = {{"total", entries.size()}, {"passed", passed}, {"failed", entries.size() - passed},
                 {"results", results}};
    r.pass = passed == entries.size();
    r.certifies = "Every command of the manifest passed.";
    return r;
}

} // namespace

} // namespace entriv::cli
