#include "entriv/steenrod/cochains.hpp"

#include "entriv/error.hpp"

#include <algorithm>
#include <set>

namespace entriv {

namespace {

std::vector<int> identity_map(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
        v[static_cast<std::size_t>(i)] = i;
    return v;
}

std::vector<int> coface(int n, int i)
{
    std::vector<int> v;
    for (int k = 0; k <= n; ++k)
        if (k != i)
            v.push_back(k);
    return v;
}

} // namespace

std::size_t SimplicialSet::add_vertex(const std::string& name) { return add_simplex(name, {}); }

Simplex SimplicialSet::from_spec(const FaceSpec& f, int expected_dim) const
{
    const auto it = by_name_.find(f.target);
    if (it == by_name_.end())
        throw InvalidInput("face refers to unknown simplex '" + f.target + "'");
    const auto [k, idx] = it->second;
    const int m = k + static_cast<int>(f.degeneracies.size());
    if (m != expected_dim)
        throw InvalidInput("face '" + f.target + "' with " + std::to_string(f.degeneracies.size()) +
                           " degeneracies has dimension " + std::to_string(m) + ", expected " +
                           std::to_string(expected_dim));
    // s_{w0} ... s_{w(l-1)} tau: apply s_{w(l-1)} first. As maps on [.] this is
    // eta = sigma^{w(l-1)} o ... o sigma^{w0} with sigma^j hitting j twice.
    std::vector<int> eta = identity_map(m);
    int cur = m;
    for (int j : f.degeneracies) {
        if (j < 0 || j >= cur)
            throw InvalidInput("degeneracy s_" + std::to_string(j) + " out of range on a " +
                               std::to_string(cur - 1) + "-simplex");
        for (auto& v : eta)
            if (v > j)
                --v;
        --cur;
    }
    return {k, idx, std::move(eta)};
}

std::size_t SimplicialSet::add_simplex(const std::string& name, const std::vector<FaceSpec>& faces)
{
    if (name.empty())
        throw InvalidInput("simplex names must be nonempty");
    if (by_name_.contains(name))
        throw InvalidInput("duplicate simplex name '" + name + "'");
    const int n = faces.empty() ? 0 : static_cast<int>(faces.size()) - 1;
    if (faces.size() == 1)
        throw InvalidInput("a simplex needs zero faces (vertex) or at least two");
    std::vector<Simplex> fs;
    for (const auto& f : faces)
        fs.push_back(from_spec(f, n - 1));
    for (int j = 1; j <= n && n >= 2; ++j)
        for (int i = 0; i < j; ++i)
            if (face(fs[static_cast<std::size_t>(j)], i) != face(fs[static_cast<std::size_t>(i)], j - 1))
                throw InvalidInput("simplicial identity d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                   " = d_" + std::to_string(j - 1) + " d_" + std::to_string(i) + " fails on '" +
                                   name + "'");
    while (dimension() < n) {
        names_.emplace_back();
        specs_.emplace_back();
        faces_.emplace_back();
    }
    auto& bucket = names_[static_cast<std::size_t>(n)];
    bucket.push_back(name);
    specs_[static_cast<std::size_t>(n)].push_back(faces);
    faces_[static_cast<std::size_t>(n)].push_back(std::move(fs));
    by_name_[name] = {n, bucket.size() - 1};
    return bucket.size() - 1;
}

std::size_t SimplicialSet::count(int d) const
{
    if (d < 0 || d > dimension())
        return 0;
    return names_[static_cast<std::size_t>(d)].size();
}

const std::string& SimplicialSet::name(int d, std::size_t i) const
{
    return names_.at(static_cast<std::size_t>(d)).at(i);
}

std::size_t SimplicialSet::lookup(const std::string& name) const
{
    const auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw InvalidInput("unknown simplex '" + name + "'");
    return it->second.second;
}

int SimplicialSet::dimension_of(const std::string& name) const
{
    const auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw InvalidInput("unknown simplex '" + name + "'");
    return it->second.first;
}

Simplex SimplicialSet::nondegenerate(int d, std::size_t i) const
{
    if (i >= count(d))
        throw InvalidInput("no such simplex");
    return {d, i, identity_map(d)};
}

const std::vector<FaceSpec>& SimplicialSet::face_specs(int d, std::size_t i) const
{
    return specs_.at(static_cast<std::size_t>(d)).at(i);
}

Simplex SimplicialSet::apply(const std::vector<int>& theta, const Simplex& x0) const
{
    Simplex x = x0;
    std::vector<int> th = theta;
    for (;;) {
        std::vector<int> phi(th.size());
        for (std::size_t k = 0; k < th.size(); ++k) {
            const int t = th[k];
            if (t < 0 || t > x.total_dim() || (k > 0 && th[k - 1] > t))
                throw InvalidInput("face map is not monotone into the simplex");
            phi[k] = x.eta[static_cast<std::size_t>(t)];
        }
        // Epi-mono factorization of phi : [q] -> [x.dim].
        std::vector<int> image(phi.begin(), phi.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (static_cast<int>(image.size()) == x.dim + 1) {
            return {x.dim, x.index, std::move(phi)};
        }
        int missing = 0;
        while (missing < static_cast<int>(image.size()) && image[static_cast<std::size_t>(missing)] == missing)
            ++missing;
        for (auto& v : phi)
            if (v > missing)
                --v;
        const Simplex next = faces_[static_cast<std::size_t>(x.dim)][x.index][static_cast<std::size_t>(missing)];
        x = next;
        th = std::move(phi);
    }
}

Simplex SimplicialSet::face(const Simplex& x, int i) const
{
    if (x.total_dim() < 1 || i < 0 || i > x.total_dim())
        throw InvalidInput("face index out of range");
    return apply(coface(x.total_dim(), i), x);
}

Simplex SimplicialSet::restrict(int d, std::size_t i, const std::vector<int>& vertices) const
{
    return apply(vertices, nondegenerate(d, i));
}

SimplicialSet sphere_model(int n)
{
    if (n < 1)
        throw InvalidInput("sphere model needs n >= 1");
    SimplicialSet x;
    x.add_vertex("v");
    x.add_simplex("e", std::vector<FaceSpec>(static_cast<std::size_t>(n + 1),
                                             FaceSpec{"v", std::vector<int>(static_cast<std::size_t>(n - 1), 0)}));
    return x;
}

SimplicialSet simplicial_complex_model(const std::vector<std::vector<int>>& facets)
{
    std::set<std::vector<int>> simplices;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        if (f.empty() || std::adjacent_find(f.begin(), f.end()) != f.end())
            throw InvalidInput("facets must be nonempty sets of distinct vertices");
        if (f.size() > 20)
            throw LimitExceeded("facet too large");
        const std::uint32_t subsets = 1u << f.size();
        for (std::uint32_t mask = 1; mask < subsets; ++mask) {
            std::vector<int> s;
            for (std::size_t b = 0; b < f.size(); ++b)
                if (mask >> b & 1u)
                    s.push_back(f[b]);
            simplices.insert(std::move(s));
        }
    }
    std::vector<std::vector<int>> ordered(simplices.begin(), simplices.end());
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    auto label = [](const std::vector<int>& s) {
        std::string out;
        for (std::size_t k = 0; k < s.size(); ++k)
            out += (k ? "_" : "") + std::to_string(s[k]);
        return out;
    };
    SimplicialSet x;
    for (const auto& s : ordered) {
        std::vector<FaceSpec> faces;
        if (s.size() > 1)
            for (std::size_t i = 0; i < s.size(); ++i) {
                auto t = s;
                t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
                faces.push_back({label(t), {}});
            }
        x.add_simplex(label(s), faces);
    }
    return x;
}

SimplicialSet standard_simplex(int n)
{
    if (n < 0)
        throw InvalidInput("standard simplex needs n >= 0");
    std::vector<int> all;
    for (int i = 0; i <= n; ++i)
        all.push_back(i);
    return simplicial_complex_model({all});
}

SimplicialSet rp2_model()
{
    return simplicial_complex_model({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                     {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
}

Cochain zero_cochain(const SimplicialSet& x, int degree)
{
    return {degree, std::vector<std::uint8_t>(x.count(degree), 0)};
}

bool is_zero(const Cochain& c)
{
    return std::all_of(c.values.begin(), c.values.end(), [](std::uint8_t v) { return v == 0; });
}

Cochain operator+(const Cochain& a, const Cochain& b)
{
    if (a.degree != b.degree || a.values.size() != b.values.size())
        throw InvalidInput("adding cochains of different degrees");
    Cochain c = a;
    for (std::size_t i = 0; i < c.values.size(); ++i)
        c.values[i] ^= b.values[i];
    return c;
}

bool evaluate(const Cochain& c, const Simplex& s)
{
    if (s.degenerate() || s.dim != c.degree)
        return false;
    return c.values.at(s.index) != 0;
}

namespace {

void check_cochain(const SimplicialSet& x, const Cochain& c)
{
    if (c.values.size() != x.count(c.degree))
        throw InvalidInput("cochain of degree " + std::to_string(c.degree) + " has " +
                           std::to_string(c.values.size()) + " values, expected " +
                           std::to_string(x.count(c.degree)));
}

} // namespace

Cochain coboundary(const SimplicialSet& x, const Cochain& c)
{
    check_cochain(x, c);
    Cochain out = zero_cochain(x, c.degree + 1);
    for (std::size_t s = 0; s < out.values.size(); ++s) {
        const Simplex sigma = x.nondegenerate(c.degree + 1, s);
        std::uint8_t v = 0;
        for (int i = 0; i <= c.degree + 1; ++i)
            v ^= evaluate(c, x.face(sigma, i)) ? 1 : 0;
        out.values[s] = v;
    }
    return out;
}

Gf2Matrix coboundary_image(const SimplicialSet& x, int d)
{
    Gf2Matrix m(x.count(d - 1), x.count(d));
    for (std::size_t s = 0; s < x.count(d); ++s) {
        const Simplex sigma = x.nondegenerate(d, s);
        for (int i = 0; i <= d && d >= 1; ++i) {
            const Simplex f = x.face(sigma, i);
            if (!f.degenerate())
                m.flip(f.index, s);
        }
    }
    return m;
}

bool is_cocycle(const SimplicialSet& x, const Cochain& c) { return is_zero(coboundary(x, c)); }

bool is_coboundary(const SimplicialSet& x, const Cochain& c)
{
    check_cochain(x, c);
    if (is_zero(c))
        return true;
    const Gf2Matrix img = coboundary_image(x, c.degree);
    Gf2Matrix aug(img.rows() + 1, img.cols());
    for (std::size_t r = 0; r < img.rows(); ++r)
        for (std::size_t col = 0; col < img.cols(); ++col)
            aug.set(r, col, img.get(r, col));
    for (std::size_t col = 0; col < img.cols(); ++col)
        aug.set(img.rows(), col, c.values[col] != 0);
    return aug.rank() == img.rank();
}

bool cohomologous(const SimplicialSet& x, const Cochain& a, const Cochain& b) { return is_coboundary(x, a + b); }

std::size_t cohomology_dimension(const SimplicialSet& x, int d)
{
    if (d < 0)
        return 0;
    return x.count(d) - coboundary_image(x, d + 1).rank() - coboundary_image(x, d).rank();
}

Cochain cup_i(const SimplicialSet& x, const Cochain& a, const Cochain& b, int i)
{
    check_cochain(x, a);
    check_cochain(x, b);
    if (i < 0 || i > std::min(a.degree, b.degree))
        throw InvalidInput("cup_" + std::to_string(i) + " needs 0 <= i <= min(" + std::to_string(a.degree) + ", " +
                           std::to_string(b.degree) + ")");
    const int n = a.degree + b.degree - i;
    Cochain out = zero_cochain(x, n);
    if (out.values.empty() || is_zero(a) || is_zero(b))
        return out;
    // Enumerate 0 <= j_0 < ... < j_i <= n.
    std::vector<std::vector<int>> splits;
    std::vector<int> j(static_cast<std::size_t>(i + 1));
    for (int k = 0; k <= i; ++k)
        j[static_cast<std::size_t>(k)] = k;
    for (;;) {
        std::vector<int> u0, u1;
        int lo = 0;
        for (int k = 0; k <= i + 1; ++k) {
            const int hi = k <= i ? j[static_cast<std::size_t>(k)] : n;
            auto& u = k % 2 == 0 ? u0 : u1;
            for (int v = lo; v <= hi; ++v)
                if (u.empty() || u.back() < v)
                    u.push_back(v);
            lo = hi;
        }
        if (static_cast<int>(u0.size()) == a.degree + 1 && static_cast<int>(u1.size()) == b.degree + 1) {
            splits.push_back(std::move(u0));
            splits.push_back(std::move(u1));
        }
        int k = i;
        while (k >= 0 && j[static_cast<std::size_t>(k)] == n - (i - k))
            --k;
        if (k < 0)
            break;
        ++j[static_cast<std::size_t>(k)];
        for (int r = k + 1; r <= i; ++r)
            j[static_cast<std::size_t>(r)] = j[static_cast<std::size_t>(r - 1)] + 1;
    }
    for (std::size_t s = 0; s < out.values.size(); ++s) {
        std::uint8_t v = 0;
        for (std::size_t k = 0; k < splits.size(); k += 2)
            if (evaluate(a, x.restrict(n, s, splits[k])) && evaluate(b, x.restrict(n, s, splits[k + 1])))
                v ^= 1;
        out.values[s] = v;
    }
    return out;
}

SqResult sq(const SimplicialSet& x, int k, const Cochain& a)
{
    if (k < 0)
        throw InvalidInput("Sq^k needs k >= 0");
    if (!is_cocycle(x, a))
        throw InvalidInput("Sq^k is only defined on cocycles");
    SqResult r;
    r.k = k;
    r.degree = a.degree + k;
    if (k > a.degree) {
        r.representative = zero_cochain(x, r.degree);
        return r;
    }
    r.representative = cup_i(x, a, a, a.degree - k);
    r.zero_class = is_coboundary(x, r.representative);
    return r;
}

TrivialityWitness triviality_witness(int n)
{
    const SimplicialSet x = sphere_model(n);
    const Cochain g{n, {1}};
    TrivialityWitness w;
    w.n = n;
    w.generator_nonzero = is_cocycle(x, g) && !is_coboundary(x, g);
    const SqResult s = sq(x, 0, g);
    w.sq0_is_generator = cohomologous(x, s.representative, g);
    // On the trivial square-zero algebra F_2 + F_2[-n] every operation on the
    // degree -n class vanishes.
    w.trivial_algebra_value = 0;
    w.not_trivial = w.generator_nonzero && w.sq0_is_generator && !s.zero_class;
    w.pass = w.not_trivial;
    return w;
}

SimplicialSet simplicial_set_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("simplices") || !j["simplices"].is_object())
        throw InvalidInput("simplicial set JSON needs a \"simplices\" object");
    std::map<int, nlohmann::json> by_dim;
    for (const auto& [key, value] : j["simplices"].items()) {
        int d = 0;
        try {
            std::size_t used = 0;
            d = std::stoi(key, &used);
            if (used != key.size() || d < 0)
                throw InvalidInput("");
        } catch (const std::exception&) {
            throw InvalidInput("bad dimension key '" + key + "'");
        }
        by_dim[d] = value;
    }
    SimplicialSet x;
    for (const auto& [d, list] : by_dim) {
        if (!list.is_array())
            throw InvalidInput("simplices of dimension " + std::to_string(d) + " must be a list");
        for (const auto& s : list) {
            if (d == 0) {
                if (!s.is_string())
                    throw InvalidInput("vertices are given by name");
                x.add_vertex(s.get<std::string>());
                continue;
            }
            if (!s.is_object() || !s.contains("name") || !s.contains("faces") || !s["faces"].is_array())
                throw InvalidInput("simplex entries need \"name\" and \"faces\"");
            std::vector<FaceSpec> faces;
            for (const auto& f : s["faces"]) {
                if (!f.is_array() || f.size() != 2)
                    throw InvalidInput("a face is [target, degeneracy word]");
                faces.push_back({f[0].get<std::string>(), f[1].get<std::vector<int>>()});
            }
            if (static_cast<int>(faces.size()) != d + 1)
                throw InvalidInput("simplex '" + s["name"].get<std::string>() + "' of dimension " +
                                   std::to_string(d) + " needs " + std::to_string(d + 1) + " faces");
            x.add_simplex(s["name"].get<std::string>(), faces);
        }
    }
    return x;
}

nlohmann::json to_json_value(const SimplicialSet& x)
{
    nlohmann::json simplices = nlohmann::json::object();
    for (int d = 0; d <= x.dimension(); ++d) {
        auto list = nlohmann::json::array();
        for (std::size_t i = 0; i < x.count(d); ++i) {
            if (d == 0) {
                list.push_back(x.name(d, i));
                continue;
            }
            auto faces = nlohmann::json::array();
            for (const auto& f : x.face_specs(d, i))
                faces.push_back({f.target, f.degeneracies});
            list.push_back({{"name", x.name(d, i)}, {"faces", faces}});
        }
        if (!list.empty())
            simplices[std::to_string(d)] = list;
    }
    return {{"simplices", simplices}};
}

nlohmann::json to_json_value(const Cochain& c)
{
    return {{"degree", c.degree}, {"values", c.values}};
}

nlohmann::json to_json_value(const SqResult& r)
{
    return {{"k", r.k}, {"degree", r.degree}, {"representative", to_json_value(r.representative)},
            {"zero_class", r.zero_class}};
}

nlohmann::json to_json_value(const TrivialityWitness& w)
{
    return {{"n", w.n},
            {"generator_nonzero", w.generator_nonzero},
            {"sq0_is_generator", w.sq0_is_generator},
            {"trivial_algebra_value", w.trivial_algebra_value},
            {"not_trivial", w.not_trivial},
            {"pass", w.pass}};
}

} // namespace entriv
