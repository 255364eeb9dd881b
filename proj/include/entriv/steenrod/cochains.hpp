#pragma once

#include "entriv/core/modp.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace entriv {

// A simplex of a simplicial set written as eta^* tau, with tau nondegenerate
// of dimension k and eta : [m] -> [k] a monotone surjection stored as its
// values. It is nondegenerate exactly when m == k.
struct Simplex {
    int dim = 0;              // dimension of tau
    std::size_t index = 0;    // tau among the nondegenerate dim-simplices
    std::vector<int> eta;     // size m + 1

    int total_dim() const { return static_cast<int>(eta.size()) - 1; }
    bool degenerate() const { return total_dim() != dim; }
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

// Face d_i of a new simplex: s_{w[0]} s_{w[1]} ... s_{w[l-1]} target.
struct FaceSpec {
    std::string target;
    std::vector<int> degeneracies;
};

class SimplicialSet {
public:
    std::size_t add_vertex(const std::string& name);
    // Dimension is faces.size() - 1. Checks dimensions, degeneracy ranges and
    // the identities d_i d_j = d_{j-1} d_i for i < j.
    std::size_t add_simplex(const std::string& name, const std::vector<FaceSpec>& faces);

    int dimension() const { return static_cast<int>(names_.size()) - 1; }
    std::size_t count(int d) const;
    const std::string& name(int d, std::size_t i) const;
    std::size_t lookup(const std::string& name) const;
    int dimension_of(const std::string& name) const;

    Simplex nondegenerate(int d, std::size_t i) const;
    const std::vector<FaceSpec>& face_specs(int d, std::size_t i) const;
    // theta^* x for a monotone map theta : [q] -> [total_dim(x)].
    Simplex apply(const std::vector<int>& theta, const Simplex& x) const;
    Simplex face(const Simplex& x, int i) const;
    // Restriction of a nondegenerate simplex to a strictly increasing vertex list.
    Simplex restrict(int d, std::size_t i, const std::vector<int>& vertices) const;

private:
    Simplex from_spec(const FaceSpec& f, int expected_dim) const;

    std::vector<std::vector<std::string>> names_;
    std::vector<std::vector<std::vector<FaceSpec>>> specs_;
    std::vector<std::vector<std::vector<Simplex>>> faces_;
    std::map<std::string, std::pair<int, std::size_t>> by_name_;
};

// Delta^n / boundary: one vertex and one n-simplex whose faces are all s_0^{n-1} v.
SimplicialSet sphere_model(int n);
// Ordered simplicial complex generated by the given facets (vertex labels are
// sorted within each facet). Simplices are named by their joined labels.
SimplicialSet simplicial_complex_model(const std::vector<std::vector<int>>& facets);
SimplicialSet standard_simplex(int n);
SimplicialSet rp2_model();

// Normalized mod-2 cochain: one coefficient per nondegenerate simplex.
struct Cochain {
    int degree = 0;
    std::vector<std::uint8_t> values;
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain zero_cochain(const SimplicialSet& x, int degree);
bool is_zero(const Cochain& c);
Cochain operator+(const Cochain& a, const Cochain& b);
// Value on an arbitrary simplex: zero on degenerate ones.
bool evaluate(const Cochain& c, const Simplex& s);

Cochain coboundary(const SimplicialSet& x, const Cochain& c);
// Rows indexed by (d-1)-simplices; row tau is the coboundary of its indicator.
Gf2Matrix coboundary_image(const SimplicialSet& x, int d);
bool is_cocycle(const SimplicialSet& x, const Cochain& c);
bool is_coboundary(const SimplicialSet& x, const Cochain& c);
bool cohomologous(const SimplicialSet& x, const Cochain& a, const Cochain& b);
std::size_t cohomology_dimension(const SimplicialSet& x, int d);

// Interval formula: sum over 0 <= j_0 < ... < j_i <= n of
// a(sigma|U0) b(sigma|U1), U0 = [0,j_0] u [j_1,j_2] u ..., U1 = [j_0,j_1] u [j_2,j_3] u ...
Cochain cup_i(const SimplicialSet& x, const Cochain& a, const Cochain& b, int i);

struct SqResult {
    int k = 0;
    int degree = 0;
    Cochain representative;
    bool zero_class = true;
};

// Class of a cup_{|a|-k} a; zero for k > |a|. Rejects non-cocycles.
SqResult sq(const SimplicialSet& x, int k, const Cochain& a);

struct TrivialityWitness {
    int n = 0;
    bool generator_nonzero = false;
    bool sq0_is_generator = false;
    int trivial_algebra_value = 0;
    bool not_trivial = false;
    bool pass = false;
};

TrivialityWitness triviality_witness(int n);

SimplicialSet simplicial_set_from_json(const nlohmann::json& j);
nlohmann::json to_json_value(const SimplicialSet& x);
nlohmann::json to_json_value(const Cochain& c);
nlohmann::json to_json_value(const SqResult& r);
nlohmann::json to_json_value(const TrivialityWitness& w);

} // namespace entriv
