#include "entriv/rep/module.hpp"

#include "entriv/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace entriv {

namespace {

SignedPermutation compose_signed(const SignedPermutation& a, const SignedPermutation& b)
{
    SignedPermutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        const SignedIndex& x = b[i];
        const SignedIndex& y = a[x.index];
        out[i] = {y.index, x.sign * y.sign};
    }
    return out;
}

SignedPermutation identity_signed(std::size_t dim)
{
    SignedPermutation out(dim);
    for (std::size_t i = 0; i < dim; ++i)
        out[i] = {i, 1};
    return out;
}

bool is_identity(const SignedPermutation& p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i].index != i || p[i].sign != 1)
            return false;
    return true;
}

template <class T, class Compose, class IsId>
void check_relations(const std::vector<T>& gens, Compose compose, IsId is_id)
{
    const std::size_t k = gens.size();
    for (std::size_t i = 0; i < k; ++i) {
        if (!is_id(compose(gens[i], gens[i])))
            throw InvalidInput("generator s_" + std::to_string(i) + " is not an involution");
        if (i + 1 < k) {
            const T st = compose(gens[i], gens[i + 1]);
            if (!is_id(compose(st, compose(st, st))))
                throw InvalidInput("braid relation fails for s_" + std::to_string(i) + ", s_" +
                                   std::to_string(i + 1));
        }
        for (std::size_t j = i + 2; j < k; ++j)
            if (compose(gens[i], gens[j]) != compose(gens[j], gens[i]))
                throw InvalidInput("s_" + std::to_string(i) + " and s_" + std::to_string(j) + " do not commute");
    }
}

} // namespace

void SignedPermModule::validate() const
{
    check_rank(n_);
    const std::size_t expected = static_cast<std::size_t>(n_ - 1);
    if (monomial_) {
        if (signed_.size() != expected)
            throw InvalidInput("expected " + std::to_string(expected) + " generators for Sigma_" + std::to_string(n_));
        for (const auto& g : signed_) {
            if (g.size() != dim_)
                throw InvalidInput("generator length does not match dim");
            std::vector<bool> hit(dim_, false);
            for (const auto& x : g) {
                if (x.index >= dim_ || hit[x.index] || (x.sign != 1 && x.sign != -1))
                    throw InvalidInput("generator is not a signed permutation of the basis");
                hit[x.index] = true;
            }
        }
        check_relations(signed_, compose_signed, [](const SignedPermutation& p) { return is_identity(p); });
    } else {
        if (matrices_.size() != expected)
            throw InvalidInput("expected " + std::to_string(expected) + " generators for Sigma_" + std::to_string(n_));
        for (const auto& g : matrices_)
            if (g.rows() != dim_ || g.cols() != dim_)
                throw InvalidInput("generator matrix has wrong shape");
        check_relations(
            matrices_, [](const QMatrix& a, const QMatrix& b) { return a * b; },
            [](const QMatrix& m) { return m.is_identity(); });
    }
}

SignedPermModule SignedPermModule::monomial(int n, std::size_t dim, std::vector<SignedPermutation> generators)
{
    SignedPermModule m;
    m.n_ = n;
    m.dim_ = dim;
    m.monomial_ = true;
    m.signed_ = std::move(generators);
    m.validate();
    return m;
}

SignedPermModule SignedPermModule::from_matrices(int n, std::size_t dim, std::vector<QMatrix> generators)
{
    std::vector<SignedPermutation> signed_gens;
    bool monomial = true;
    for (const auto& g : generators) {
        if (g.rows() != dim || g.cols() != dim)
            throw InvalidInput("generator matrix has wrong shape");
        SignedPermutation sp(dim);
        for (std::size_t c = 0; c < dim && monomial; ++c) {
            int nonzero = 0;
            for (std::size_t r = 0; r < dim; ++r) {
                const Rational& x = g(r, c);
                if (sgn(x) == 0)
                    continue;
                ++nonzero;
                if (x == 1 || x == -1)
                    sp[c] = {r, x == 1 ? 1 : -1};
                else
                    monomial = false;
            }
            if (nonzero != 1)
                monomial = false;
        }
        signed_gens.push_back(std::move(sp));
    }
    if (monomial)
        return SignedPermModule::monomial(n, dim, std::move(signed_gens));
    SignedPermModule m;
    m.n_ = n;
    m.dim_ = dim;
    m.monomial_ = false;
    m.matrices_ = std::move(generators);
    m.validate();
    return m;
}

SignedPermModule SignedPermModule::trivial(int n, std::size_t dim)
{
    return monomial(n, dim, std::vector<SignedPermutation>(static_cast<std::size_t>(n - 1), identity_signed(dim)));
}

SignedPermModule SignedPermModule::sign_rep(int n) { return trivial(n, 1).sign_twist(1); }

SignedPermModule SignedPermModule::zero(int n) { return trivial(n, 0); }

SignedPermModule SignedPermModule::regular(int n)
{
    check_rank(n);
    const auto elems = all_permutations(n);
    std::map<Permutation, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index[elems[i]] = i;
    std::vector<SignedPermutation> gens;
    for (int i = 0; i + 1 < n; ++i) {
        const Permutation s = adjacent_transposition(n, i);
        SignedPermutation g(elems.size());
        for (std::size_t j = 0; j < elems.size(); ++j)
            g[j] = {index.at(s * elems[j]), 1};
        gens.push_back(std::move(g));
    }
    return monomial(n, elems.size(), std::move(gens));
}

SignedPermModule SignedPermModule::words(const std::vector<int>& letters, bool sign_twisted)
{
    const int n = static_cast<int>(letters.size());
    check_rank(n);
    std::vector<int> w = letters;
    std::sort(w.begin(), w.end());
    std::vector<std::vector<int>> basis;
    do {
        basis.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i)
        index[basis[i]] = i;
    const int s = sign_twisted ? -1 : 1;
    std::vector<SignedPermutation> gens;
    for (int i = 0; i + 1 < n; ++i) {
        SignedPermutation g(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto v = basis[j];
            std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i) + 1]);
            g[j] = {index.at(v), s};
        }
        gens.push_back(std::move(g));
    }
    return monomial(n, basis.size(), std::move(gens));
}

SignedPermModule SignedPermModule::standard_permutation(int n)
{
    check_rank(n);
    std::vector<SignedPermutation> gens;
    for (int i = 0; i + 1 < n; ++i) {
        SignedPermutation g = identity_signed(static_cast<std::size_t>(n));
        std::swap(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(i) + 1]);
        gens.push_back(std::move(g));
    }
    return monomial(n, static_cast<std::size_t>(n), std::move(gens));
}

const std::vector<SignedPermutation>& SignedPermModule::signed_generators() const
{
    if (!monomial_)
        throw InvalidInput("module is not monomial");
    return signed_;
}

QMatrix SignedPermModule::generator_matrix(int i) const
{
    if (!monomial_)
        return matrices_.at(static_cast<std::size_t>(i));
    QMatrix m(dim_, dim_);
    const auto& g = signed_.at(static_cast<std::size_t>(i));
    for (std::size_t c = 0; c < dim_; ++c)
        m(g[c].index, c) = g[c].sign;
    return m;
}

SignedPermutation SignedPermModule::act(const Permutation& g) const
{
    if (!monomial_)
        throw InvalidInput("module is not monomial");
    if (static_cast<int>(g.size()) != n_)
        throw InvalidInput("group element has the wrong rank");
    SignedPermutation out = identity_signed(dim_);
    for (int i : reduced_word(g))
        out = compose_signed(out, signed_[static_cast<std::size_t>(i)]);
    return out;
}

QMatrix SignedPermModule::matrix(const Permutation& g) const
{
    if (static_cast<int>(g.size()) != n_)
        throw InvalidInput("group element has the wrong rank");
    if (monomial_) {
        QMatrix m(dim_, dim_);
        const auto a = act(g);
        for (std::size_t c = 0; c < dim_; ++c)
            m(a[c].index, c) = a[c].sign;
        return m;
    }
    QMatrix out = QMatrix::identity(dim_);
    for (int i : reduced_word(g))
        out = out * matrices_[static_cast<std::size_t>(i)];
    return out;
}

Rational SignedPermModule::trace(const Permutation& g) const
{
    if (!monomial_)
        return matrix(g).trace();
    const auto a = act(g);
    long t = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        if (a[i].index == i)
            t += a[i].sign;
    return Rational(t);
}

SignedPermModule SignedPermModule::sign_twist(int k) const
{
    if (k % 2 == 0)
        return *this;
    SignedPermModule out = *this;
    for (auto& g : out.signed_)
        for (auto& x : g)
            x.sign = -x.sign;
    for (auto& m : out.matrices_)
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = -m(r, c);
    return out;
}

SignedPermModule direct_sum(const SignedPermModule& a, const SignedPermModule& b)
{
    if (a.n() != b.n())
        throw InvalidInput("direct sum of modules over different symmetric groups");
    const std::size_t dim = a.dim() + b.dim();
    if (a.is_monomial() && b.is_monomial()) {
        std::vector<SignedPermutation> gens;
        for (int i = 0; i + 1 < a.n(); ++i) {
            SignedPermutation g = a.signed_generators()[static_cast<std::size_t>(i)];
            for (const auto& x : b.signed_generators()[static_cast<std::size_t>(i)])
                g.push_back({x.index + a.dim(), x.sign});
            gens.push_back(std::move(g));
        }
        return SignedPermModule::monomial(a.n(), dim, std::move(gens));
    }
    std::vector<QMatrix> gens;
    for (int i = 0; i + 1 < a.n(); ++i) {
        QMatrix m(dim, dim);
        const QMatrix ga = a.generator_matrix(i), gb = b.generator_matrix(i);
        for (std::size_t r = 0; r < a.dim(); ++r)
            for (std::size_t c = 0; c < a.dim(); ++c)
                m(r, c) = ga(r, c);
        for (std::size_t r = 0; r < b.dim(); ++r)
            for (std::size_t c = 0; c < b.dim(); ++c)
                m(a.dim() + r, a.dim() + c) = gb(r, c);
        gens.push_back(std::move(m));
    }
    return SignedPermModule::from_matrices(a.n(), dim, std::move(gens));
}

SignedPermModule tensor(const SignedPermModule& a, const SignedPermModule& b)
{
    if (a.n() != b.n())
        throw InvalidInput("tensor product of modules over different symmetric groups");
    const std::size_t dim = a.dim() * b.dim();
    if (a.is_monomial() && b.is_monomial()) {
        std::vector<SignedPermutation> gens;
        for (int i = 0; i + 1 < a.n(); ++i) {
            const auto& ga = a.signed_generators()[static_cast<std::size_t>(i)];
            const auto& gb = b.signed_generators()[static_cast<std::size_t>(i)];
            SignedPermutation g(dim);
            for (std::size_t x = 0; x < a.dim(); ++x)
                for (std::size_t y = 0; y < b.dim(); ++y)
                    g[x * b.dim() + y] = {ga[x].index * b.dim() + gb[y].index, ga[x].sign * gb[y].sign};
            gens.push_back(std::move(g));
        }
        return SignedPermModule::monomial(a.n(), dim, std::move(gens));
    }
    std::vector<QMatrix> gens;
    for (int i = 0; i + 1 < a.n(); ++i) {
        const QMatrix ga = a.generator_matrix(i), gb = b.generator_matrix(i);
        QMatrix m(dim, dim);
        for (std::size_t r1 = 0; r1 < a.dim(); ++r1)
            for (std::size_t c1 = 0; c1 < a.dim(); ++c1) {
                if (sgn(ga(r1, c1)) == 0)
                    continue;
                for (std::size_t r2 = 0; r2 < b.dim(); ++r2)
                    for (std::size_t c2 = 0; c2 < b.dim(); ++c2)
                        m(r1 * b.dim() + r2, c1 * b.dim() + c2) = ga(r1, c1) * gb(r2, c2);
            }
        gens.push_back(std::move(m));
    }
    return SignedPermModule::from_matrices(a.n(), dim, std::move(gens));
}

CharacterVector character(const SignedPermModule& m)
{
    CharacterVector chi;
    chi.n = m.n();
    for (const auto& lambda : partitions(m.n()))
        chi.values[lambda] = m.trace(class_representative(lambda));
    return chi;
}

CharacterVector permutation_character(int n)
{
    check_rank(n);
    CharacterVector chi;
    chi.n = n;
    for (const auto& lambda : partitions(n))
        chi.values[lambda] = Rational(static_cast<long>(std::count(lambda.begin(), lambda.end(), 1)));
    return chi;
}

CharacterVector operator+(const CharacterVector& a, const CharacterVector& b)
{
    if (a.n != b.n)
        throw InvalidInput("adding characters of different symmetric groups");
    CharacterVector out = a;
    for (const auto& [lambda, v] : b.values)
        out.values[lambda] += v;
    return out;
}

Integer trivial_multiplicity(const CharacterVector& chi)
{
    Rational total = 0;
    for (const auto& [lambda, v] : chi.values)
        total += v / Rational(centralizer_order(lambda));
    total.canonicalize();
    if (total.get_den() != 1)
        throw Error("trivial multiplicity is not an integer; the input is not a character");
    return total.get_num();
}

Integer trivial_multiplicity(const SignedPermModule& m) { return trivial_multiplicity(character(m)); }

bool is_sigma_free(const SignedPermModule& m)
{
    if (!m.is_monomial())
        throw InvalidInput("freeness is only decided for monomial modules");
    const auto& gens = m.signed_generators();
    const std::size_t group_order = factorial(m.n()).get_ui();
    std::vector<bool> seen(m.dim(), false);
    for (std::size_t start = 0; start < m.dim(); ++start) {
        if (seen[start])
            continue;
        std::size_t orbit = 0;
        std::deque<std::size_t> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            ++orbit;
            for (const auto& g : gens) {
                const std::size_t y = g[x].index;
                if (!seen[y]) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        if (orbit != group_order)
            return false;
    }
    return true;
}

SignedPermModule rho(int t)
{
    check_rank(t);
    const std::size_t dim = static_cast<std::size_t>(t - 1);
    std::vector<QMatrix> gens;
    for (int i = 0; i + 1 < t; ++i) {
        QMatrix m(dim, dim);
        if (i + 2 < t) {
            for (std::size_t c = 0; c < dim; ++c)
                m(c, c) = 1;
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 0;
            m(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(i) + 1) = 0;
            m(static_cast<std::size_t>(i) + 1, static_cast<std::size_t>(i)) = 1;
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1) = 1;
        } else {
            // Swaps the last two standard vectors; the last one is minus the sum of the others.
            for (std::size_t c = 0; c + 1 < dim; ++c)
                m(c, c) = 1;
            for (std::size_t r = 0; r < dim; ++r)
                m(r, dim - 1) = -1;
        }
        gens.push_back(std::move(m));
    }
    return SignedPermModule::from_matrices(t, dim, std::move(gens));
}

QMatrix rho_matrix(int t, const Permutation& g)
{
    if (static_cast<int>(g.size()) != t)
        throw InvalidInput("group element has the wrong rank");
    const std::size_t dim = static_cast<std::size_t>(t - 1);
    QMatrix m(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
        const std::size_t image = static_cast<std::size_t>(g[c]);
        if (image < dim)
            m(image, c) = 1;
        else
            for (std::size_t r = 0; r < dim; ++r)
                m(r, c) = -1;
    }
    return m;
}

nlohmann::json to_json_value(const SignedPermModule& m)
{
    nlohmann::json j;
    j["n"] = m.n();
    j["dim"] = m.dim();
    if (m.is_monomial()) {
        auto gens = nlohmann::json::array();
        for (const auto& g : m.signed_generators()) {
            auto row = nlohmann::json::array();
            for (const auto& x : g)
                row.push_back({x.index, x.sign});
            gens.push_back(std::move(row));
        }
        j["generators"] = std::move(gens);
    } else {
        auto mats = nlohmann::json::array();
        for (int i = 0; i + 1 < m.n(); ++i) {
            const QMatrix g = m.generator_matrix(i);
            auto rows = nlohmann::json::array();
            for (std::size_t r = 0; r < g.rows(); ++r) {
                auto row = nlohmann::json::array();
                for (std::size_t c = 0; c < g.cols(); ++c)
                    row.push_back(rational_to_json(g(r, c)));
                rows.push_back(std::move(row));
            }
            mats.push_back(std::move(rows));
        }
        j["matrices"] = std::move(mats);
    }
    return j;
}

SignedPermModule signed_perm_module_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("dim"))
        throw InvalidInput("module must be an object with 'n', 'dim' and 'generators' or 'matrices'");
    const int n = j.at("n").get<int>();
    const long long dim_signed = j.at("dim").get<long long>();
    if (dim_signed < 0)
        throw InvalidInput("module dimension must be nonnegative");
    const std::size_t dim = static_cast<std::size_t>(dim_signed);
    check_rank(n);
    if (j.contains("matrices")) {
        std::vector<QMatrix> gens;
        for (const auto& jm : j.at("matrices")) {
            if (!jm.is_array() || jm.size() != dim)
                throw InvalidInput("generator matrix has wrong shape");
            QMatrix m(dim, dim);
            for (std::size_t r = 0; r < dim; ++r) {
                if (!jm[r].is_array() || jm[r].size() != dim)
                    throw InvalidInput("generator matrix has wrong shape");
                for (std::size_t c = 0; c < dim; ++c)
                    m(r, c) = rational_from_json(jm[r][c]);
            }
            gens.push_back(std::move(m));
        }
        return SignedPermModule::from_matrices(n, dim, std::move(gens));
    }
    std::vector<SignedPermutation> gens;
    if (j.contains("generators"))
        for (const auto& jg : j.at("generators")) {
            if (!jg.is_array() || jg.size() != dim)
                throw InvalidInput("generator length does not match dim");
            SignedPermutation g;
            for (const auto& x : jg) {
                if (!x.is_array() || x.size() != 2 || x[0].get<long long>() < 0)
                    throw InvalidInput("generator entries must be [index, sign] pairs");
                g.push_back({x[0].get<std::size_t>(), x[1].get<int>()});
            }
            gens.push_back(std::move(g));
        }
    return SignedPermModule::monomial(n, dim, std::move(gens));
}

std::string partition_label(const Partition& lambda)
{
    std::string s = "(";
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(lambda[i]);
    }
    return s + ")";
}

nlohmann::json to_json_value(const CharacterVector& chi)
{
    auto values = nlohmann::json::array();
    for (const auto& [lambda, v] : chi.values)
        values.push_back({{"class", partition_label(lambda)}, {"value", rational_to_json(v)}});
    return {{"n", chi.n}, {"values", std::move(values)}};
}

} // namespace entriv
