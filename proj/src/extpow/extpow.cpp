#include "entriv/extpow/extpow.hpp"

#include "entriv/core/chain_complex.hpp"
#include "entriv/error.hpp"
#include "entriv/stunted/stunted.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace entriv {

namespace {

void check_args(unsigned p, int n, Window w)
{
    require_prime(p);
    if (n < 0)
        throw InvalidInput("n must be nonnegative");
    if (w.lo > w.hi)
        throw InvalidInput("window bounds inverted: " + std::to_string(w.lo) + " > " + std::to_string(w.hi));
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

void sort_classes(std::vector<DLClass>& v)
{
    std::sort(v.begin(), v.end(), [](const DLClass& x, const DLClass& y) {
        if (x.degree != y.degree)
            return x.degree < y.degree;
        return x < y;
    });
}

bool is_cell_encoding(const DLBasis& b) { return !b.classes.empty() && b.classes.front().kind == ClassKind::Cell; }

// The collapse map to the bottom-sphere families keeps exactly the classes
// with s >= 0 (cells of degree >= -1 in the stunted encoding).
bool survives_collapse(const DLClass& c)
{
    switch (c.kind) {
    case ClassKind::Cell:
        return c.degree >= -1;
    case ClassKind::Power:
        return true;
    default:
        return c.s >= 0;
    }
}

ClassMap identity_map(const DLBasis& from)
{
    ClassMap m;
    for (const auto& c : from.classes)
        m[c] = c;
    return m;
}

ClassMap collapse_map(const DLBasis& from)
{
    ClassMap m;
    for (const auto& c : from.classes)
        m[c] = survives_collapse(c) ? std::optional<DLClass>(c) : std::nullopt;
    return m;
}

std::map<int, std::vector<DLClass>> by_degree(const DLBasis& b)
{
    std::map<int, std::vector<DLClass>> out;
    for (const auto& c : b.classes)
        out[c.degree].push_back(c);
    return out;
}

nlohmann::json class_list(const std::vector<DLClass>& v)
{
    auto out = nlohmann::json::array();
    for (const auto& c : v)
        out.push_back({{"class", class_label(c)}, {"degree", c.degree}});
    return out;
}

} // namespace

Window default_window(unsigned p, int n)
{
    const int step = static_cast<int>(p) - 1;
    return {-n * step - 2, 2 * step + 2};
}

DLBasis dl_classes(unsigned p, int n, Family family, Window window)
{
    check_args(p, n, window);
    DLBasis out{p, n, family, window, {}};
    if (family == Family::E1Zero) {
        if (window.lo <= 0 && 0 <= window.hi)
            out.classes.push_back({ClassKind::Power, 0, 0});
        return out;
    }
    const int step = 2 * (static_cast<int>(p) - 1);
    // Admissibility of Q^s and beta Q^s per family.
    auto admissible = [&](ClassKind kind, int s) {
        const bool beta = kind == ClassKind::BetaQ;
        switch (family) {
        case Family::EInfinity:
            return beta ? 2 * s > -n : 2 * s >= -n;
        case Family::EnPlus1:
            return (beta ? 2 * s > -n : 2 * s >= -n) && s <= 0;
        case Family::EnMinus1:
            return (beta ? 2 * s > -n : 2 * s >= -n) && s <= -1;
        case Family::E2Bottom:
            return s == 0;
        case Family::EInfinityBottom:
            return s >= 0;
        case Family::EInfinityZero:
            return beta ? s >= 1 : s >= 0;
        case Family::E1Zero:
            break;
        }
        return false;
    };
    for (int s = floor_div(window.lo, step) - 1; s <= floor_div(window.hi, step) + 1; ++s)
        for (ClassKind kind : {ClassKind::Q, ClassKind::BetaQ}) {
            const int degree = s * step - (kind == ClassKind::BetaQ ? 1 : 0);
            if (degree < window.lo || degree > window.hi || !admissible(kind, s))
                continue;
            out.classes.push_back({kind, s, degree});
        }
    sort_classes(out.classes);
    return out;
}

DLBasis dl_basis(unsigned p, int n, Family family, Window window)
{
    if (p == 2)
        throw InvalidInput("dl_basis is for odd primes; at p = 2 use the stunted projective model");
    if (n < 1)
        throw InvalidInput("n must be at least 1");
    return dl_classes(p, n, family, window);
}

std::vector<int> StuntedModel::cells(Window window) const
{
    std::vector<int> out;
    const int hi = top ? std::min(*top, window.hi) : window.hi;
    for (int j = std::max(bottom, window.lo); j <= hi; ++j)
        out.push_back(j);
    return out;
}

StuntedModel stunted_model_any(int n, Family family)
{
    switch (family) {
    case Family::EnMinus1:
        return {-n, -2};
    case Family::EnPlus1:
        return {-n, 0};
    case Family::EInfinity:
        return {-n, std::nullopt};
    case Family::E2Bottom:
        return {-1, 0};
    case Family::EInfinityBottom:
        return {-1, std::nullopt};
    case Family::E1Zero:
        return {0, 0};
    case Family::EInfinityZero:
        return {0, std::nullopt};
    }
    throw InvalidInput("unknown family");
}

StuntedModel p2_stunted_model(int n, Family family)
{
    if (n < 1)
        throw InvalidInput("n must be at least 1");
    if (family == Family::E1Zero || family == Family::EInfinityZero)
        throw InvalidInput("no stunted model is tabulated for family " + family_name(family));
    return stunted_model_any(n, family);
}

DLBasis verification_basis(unsigned p, int n, Family family, Window window)
{
    if (p != 2)
        return dl_classes(p, n, family, window);
    check_args(p, n, window);
    DLBasis out{p, n, family, window, {}};
    for (int j : stunted_model_any(n, family).cells(window))
        out.classes.push_back({ClassKind::Cell, j, j});
    return out;
}

SequenceCheck check_short_exact(const DLBasis& a, const DLBasis& b, const DLBasis& c, const ClassMap& f,
                                const ClassMap& g)
{
    SequenceCheck out;
    const auto A = by_degree(a), B = by_degree(b), C = by_degree(c);
    const std::set<DLClass> in_b(b.classes.begin(), b.classes.end());
    const std::set<DLClass> in_c(c.classes.begin(), c.classes.end());
    std::set<int> degrees;
    for (const auto* m : {&A, &B, &C})
        for (const auto& [d, v] : *m)
            degrees.insert(d);

    auto image = [](const ClassMap& m, const DLClass& x) -> std::optional<DLClass> {
        auto it = m.find(x);
        return it == m.end() ? std::nullopt : it->second;
    };
    auto get = [](const std::map<int, std::vector<DLClass>>& m, int d) {
        auto it = m.find(d);
        return it == m.end() ? std::vector<DLClass>{} : it->second;
    };

    out.pass = true;
    for (int d : degrees) {
        DegreeRow row;
        const auto ad = get(A, d), bd = get(B, d), cd = get(C, d);
        row.a = ad.size();
        row.b = bd.size();
        row.c = cd.size();

        std::set<DLClass> f_image;
        for (const auto& x : ad) {
            const auto y = image(f, x);
            if (!y || !in_b.count(*y) || f_image.count(*y)) {
                row.injective = false;
                continue;
            }
            if (y->degree != x.degree)
                out.degree_preserving = false;
            f_image.insert(*y);
            if (image(g, *y))
                row.composite_zero = false;
        }
        std::set<DLClass> g_kernel, g_image;
        for (const auto& y : bd) {
            const auto z = image(g, y);
            if (!z) {
                g_kernel.insert(y);
                continue;
            }
            if (!in_c.count(*z) || z->degree != y.degree)
                out.degree_preserving = false;
            g_image.insert(*z);
        }
        row.exact_middle = g_kernel == f_image;
        row.surjective = g_image == std::set<DLClass>(cd.begin(), cd.end());
        row.additive = row.b == row.a + row.c;
        out.pass = out.pass && row.injective && row.composite_zero && row.exact_middle && row.surjective && row.additive;
        out.degrees[d] = row;
    }
    out.pass = out.pass && out.degree_preserving;
    return out;
}

SesReport verify_ses(unsigned p, int n, Sequence which, std::optional<Window> window)
{
    if (n < 1)
        throw InvalidInput("n must be at least 1");
    SesReport r;
    r.p = p;
    r.n = n;
    r.which = which;
    r.window = window.value_or(default_window(p, n));
    const bool first = which == Sequence::First;
    r.a = verification_basis(p, n, Family::EnMinus1, r.window);
    r.b = verification_basis(p, n, first ? Family::EnPlus1 : Family::EInfinity, r.window);
    r.c = verification_basis(p, 1, first ? Family::E2Bottom : Family::EInfinityBottom, r.window);
    r.check = check_short_exact(r.a, r.b, r.c, identity_map(r.a), collapse_map(r.b));
    r.pass = r.check.pass;
    return r;
}

PushoutReport pushout_rank_check(unsigned p, int n, std::optional<Window> window)
{
    if (n < 1)
        throw InvalidInput("n must be at least 1");
    PushoutReport r;
    r.p = p;
    r.n = n;
    r.window = window.value_or(default_window(p, n));
    const auto tl = verification_basis(p, n, Family::EnPlus1, r.window);
    const auto tr = verification_basis(p, n, Family::EInfinity, r.window);
    const auto bl = verification_basis(p, 1, Family::E2Bottom, r.window);
    const auto br = verification_basis(p, 1, Family::EInfinityBottom, r.window);

    auto kernel = [](const DLBasis& from, const DLBasis& to, std::vector<DLClass>& classes) {
        const std::set<DLClass> target(to.classes.begin(), to.classes.end());
        std::map<int, std::size_t> dims;
        for (const auto& [x, y] : collapse_map(from)) {
            if (!y) {
                classes.push_back(x);
                ++dims[x.degree];
            } else if (!target.count(*y)) {
                throw Error("collapse map leaves the target basis at " + class_label(x));
            }
        }
        sort_classes(classes);
        return dims;
    };
    r.left_kernel = kernel(tl, bl, r.left_kernel_classes);
    r.right_kernel = kernel(tr, br, r.right_kernel_classes);
    r.kernels_equal = r.left_kernel == r.right_kernel && r.left_kernel_classes == r.right_kernel_classes;

    std::set<int> degrees;
    std::map<int, long> count[4];
    const DLBasis* corners[4] = {&tl, &tr, &bl, &br};
    for (int i = 0; i < 4; ++i)
        for (const auto& c : corners[i]->classes) {
            ++count[i][c.degree];
            degrees.insert(c.degree);
        }
    r.euler_zero = true;
    for (int d : degrees) {
        const long e = count[0][d] - count[1][d] - count[2][d] + count[3][d];
        r.euler[d] = e;
        r.euler_zero = r.euler_zero && e == 0;
    }
    r.pass = r.kernels_equal && r.euler_zero;
    return r;
}

MooreReport moore_identification(unsigned p)
{
    require_prime(p);
    MooreReport r;
    r.p = p;
    const Window w{-1, 0};
    const auto bottom = verification_basis(p, 1, Family::E2Bottom, {-3, 3});
    r.bottom_basis = bottom.classes;
    r.basis_is_two_cells = bottom.classes.size() == 2 && bottom.classes[0].degree == -1 && bottom.classes[1].degree == 0;

    if (p == 2) {
        const auto sq1 = stunted_sq(-1, 0, 1);
        r.bockstein_pairs = sq1.get(1, 0);
    } else {
        const DLClass q0{ClassKind::Q, 0, 0}, bq0{ClassKind::BetaQ, 0, -1};
        r.bockstein_pairs = std::count(bottom.classes.begin(), bottom.classes.end(), q0) == 1 &&
                            std::count(bottom.classes.begin(), bottom.classes.end(), bq0) == 1;
    }

    // Two-cell complex Z --p--> Z in degrees 0 -> -1.
    IntMatrix d(1, 1);
    d(0, 0) = p;
    const ChainComplex moore({{-1, 1}, {0, 1}}, {{0, d}});
    const auto hp = homology(moore, Coefficients::field(p));
    const auto hz = homology(moore);
    for (int deg : {-1, 0})
        r.moore_mod_p[deg] = hp.at(deg).free;
    r.moore_integral = to_json_value(hz.at(-1)).dump();
    std::map<int, std::size_t> basis_dims;
    for (const auto& c : bottom.classes)
        if (c.degree >= w.lo && c.degree <= w.hi)
            ++basis_dims[c.degree];
    r.homology_matches = basis_dims == r.moore_mod_p && hz.at(-1) == AbelianGroup{0, {Integer(p)}} &&
                         hz.at(0).is_zero();

    // Map to the E_1 piece on S^0: degree-preserving onto its single class.
    const auto top = verification_basis(p, 0, Family::E1Zero, {-3, 3});
    bool ok = top.classes.size() == 1 && top.classes[0].degree == 0;
    for (const auto& c : bottom.classes) {
        std::optional<DLClass> target;
        for (const auto& t : top.classes)
            if (t.degree == c.degree)
                target = t;
        r.projection[class_label(c)] = target ? class_label(*target) : "0";
        ok = ok && (c.degree == 0 ? target.has_value() : !target.has_value());
    }
    r.projection_to_top_cell = ok;
    r.pass = r.basis_is_two_cells && r.bockstein_pairs && r.homology_matches && r.projection_to_top_cell;
    return r;
}

TransferReport transfer_cofiber_check(unsigned p, std::optional<Window> window)
{
    TransferReport r;
    r.p = p;
    r.window = window.value_or(Window{-2, 10});
    r.bottom = verification_basis(p, 1, Family::EInfinityBottom, r.window).classes;
    r.zero = verification_basis(p, 0, Family::EInfinityZero, r.window).classes;
    const std::set<DLClass> zero(r.zero.begin(), r.zero.end());
    for (const auto& c : r.bottom)
        if (!zero.count(c))
            r.difference.push_back(c);
    const bool contained = std::all_of(r.zero.begin(), r.zero.end(), [&](const DLClass& c) {
        return std::find(r.bottom.begin(), r.bottom.end(), c) != r.bottom.end();
    });
    const DLClass expected = p == 2 ? DLClass{ClassKind::Cell, -1, -1} : DLClass{ClassKind::BetaQ, 0, -1};
    const bool in_window = r.window.lo <= -1 && -1 <= r.window.hi;
    r.pass = contained && (in_window ? r.difference == std::vector<DLClass>{expected} : r.difference.empty());
    return r;
}

Family family_from_string(const std::string& name)
{
    static const std::map<std::string, Family> names{
        {"en-1", Family::EnMinus1},         {"en+1", Family::EnPlus1},           {"einf", Family::EInfinity},
        {"e2", Family::E2Bottom},           {"einf-bottom", Family::EInfinityBottom},
        {"e1", Family::E1Zero},             {"einf-zero", Family::EInfinityZero}};
    auto it = names.find(name);
    if (it == names.end())
        throw InvalidInput("unknown family '" + name + "' (expected en-1, en+1, einf, e2, einf-bottom, e1, einf-zero)");
    return it->second;
}

std::string family_name(Family f)
{
    switch (f) {
    case Family::EnMinus1:
        return "en-1";
    case Family::EnPlus1:
        return "en+1";
    case Family::EInfinity:
        return "einf";
    case Family::E2Bottom:
        return "e2";
    case Family::EInfinityBottom:
        return "einf-bottom";
    case Family::E1Zero:
        return "e1";
    case Family::EInfinityZero:
        return "einf-zero";
    }
    return "?";
}

std::string class_label(const DLClass& c)
{
    switch (c.kind) {
    case ClassKind::Q:
        return "Q^" + std::to_string(c.s);
    case ClassKind::BetaQ:
        return "betaQ^" + std::to_string(c.s);
    case ClassKind::Power:
        return "iota^p";
    case ClassKind::Cell:
        return "e_" + std::to_string(c.s);
    }
    return "?";
}

nlohmann::json to_json_value(const DLBasis& b)
{
    return {{"prime", b.p},
            {"n", b.n},
            {"family", family_name(b.family)},
            {"window", {b.window.lo, b.window.hi}},
            {"classes", class_list(b.classes)}};
}

nlohmann::json to_json_value(const SesReport& r)
{
    nlohmann::json degrees = nlohmann::json::object();
    for (const auto& [d, row] : r.check.degrees)
        degrees[std::to_string(d)] = {{"A", row.a},
                                      {"B", row.b},
                                      {"C", row.c},
                                      {"injective", row.injective},
                                      {"exact", row.composite_zero && row.exact_middle},
                                      {"surjective", row.surjective},
                                      {"additive", row.additive}};
    return {{"prime", r.p},
            {"n", r.n},
            {"which", r.which == Sequence::First ? "first" : "second"},
            {"window", {r.window.lo, r.window.hi}},
            {"encoding", is_cell_encoding(r.b) || r.p == 2 ? "stunted-cells" : "dyer-lashof"},
            {"A", class_list(r.a.classes)},
            {"B", class_list(r.b.classes)},
            {"C", class_list(r.c.classes)},
            {"degrees", std::move(degrees)},
            {"pass", r.pass}};
}

nlohmann::json to_json_value(const PushoutReport& r)
{
    nlohmann::json lk = nlohmann::json::object(), rk = nlohmann::json::object(), eu = nlohmann::json::object();
    for (const auto& [d, v] : r.left_kernel)
        lk[std::to_string(d)] = v;
    for (const auto& [d, v] : r.right_kernel)
        rk[std::to_string(d)] = v;
    for (const auto& [d, v] : r.euler)
        eu[std::to_string(d)] = v;
    return {{"prime", r.p},
            {"n", r.n},
            {"window", {r.window.lo, r.window.hi}},
            {"left_kernel", std::move(lk)},
            {"right_kernel", std::move(rk)},
            {"left_kernel_classes", class_list(r.left_kernel_classes)},
            {"right_kernel_classes", class_list(r.right_kernel_classes)},
            {"euler_characteristic", std::move(eu)},
            {"kernels_equal", r.kernels_equal},
            {"euler_zero", r.euler_zero},
            {"pass", r.pass}};
}

nlohmann::json to_json_value(const MooreReport& r)
{
    nlohmann::json mod_p = nlohmann::json::object();
    for (const auto& [d, v] : r.moore_mod_p)
        mod_p[std::to_string(d)] = v;
    return {{"prime", r.p},
            {"bottom_basis", class_list(r.bottom_basis)},
            {"basis_is_two_cells", r.basis_is_two_cells},
            {"bockstein_pairs", r.bockstein_pairs},
            {"moore_mod_p_homology", std::move(mod_p)},
            {"moore_integral_H_-1", nlohmann::json::parse(r.moore_integral)},
            {"homology_matches", r.homology_matches},
            {"projection", r.projection},
            {"projection_to_top_cell", r.projection_to_top_cell},
            {"pass", r.pass}};
}

nlohmann::json to_json_value(const TransferReport& r)
{
    return {{"prime", r.p},
            {"window", {r.window.lo, r.window.hi}},
            {"bottom", class_list(r.bottom)},
            {"zero", class_list(r.zero)},
            {"difference", class_list(r.difference)},
            {"pass", r.pass}};
}

} // namespace entriv
