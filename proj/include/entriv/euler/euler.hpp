#pragma once

#include "entriv/core/integer.hpp"
#include "entriv/rep/symmetric_group.hpp"
#include "entriv/util/rng.hpp"

#include <cstdint>
#include <vector>

namespace entriv {

inline constexpr double kFloatTolerance = 1e-12;

// |T| labelled points in R^m.
template <class Scalar>
struct BasicConfiguration {
    int m = 0;
    std::vector<std::vector<Scalar>> points;
};

// m vectors in R^T, each summing to zero (a point of rho_T^m).
template <class Scalar>
struct BasicSectionValue {
    std::vector<std::vector<Scalar>> components;
};

using Configuration = BasicConfiguration<Rational>;
using SectionValue = BasicSectionValue<Rational>;
using FloatConfiguration = BasicConfiguration<double>;
using FloatSectionValue = BasicSectionValue<double>;

// f_i = (i-th coordinates of the points) minus their mean. Throws InvalidInput
// for |T| < 2, ragged input, or coincident points (within kFloatTolerance in
// the floating version).
SectionValue section_eval(const Configuration& c);
FloatSectionValue section_eval(const FloatConfiguration& c);

bool is_zero(const SectionValue& v);
Rational norm_squared(const SectionValue& v);
double norm_squared(const FloatSectionValue& v);

// Relabelling by sigma: the point labelled t moves to label sigma(t).
Configuration act(const Permutation& sigma, const Configuration& c);
SectionValue act(const Permutation& sigma, const SectionValue& v);
FloatConfiguration act(const Permutation& sigma, const FloatConfiguration& c);
FloatSectionValue act(const Permutation& sigma, const FloatSectionValue& v);

struct EquivarianceReport {
    bool equivariant = false;
    bool components_sum_to_zero = false;
    bool nonzero = false;
    bool pass = false;
};

EquivarianceReport equivariance_test(const Configuration& c, const Permutation& sigma);
EquivarianceReport equivariance_test(const FloatConfiguration& c, const Permutation& sigma);

// Distinct points with coordinates p/q, |p| <= 64, 1 <= q <= 16.
Configuration random_configuration(Rng& rng, int m, int t);
FloatConfiguration random_float_configuration(Rng& rng, int m, int t);
Permutation random_permutation(Rng& rng, int n);

struct SectionCertificate {
    int m = 0;
    int t = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool float_mode = false;
    int copies_of_rho = 0;
    std::uint64_t failures = 0;
    std::string min_norm_squared; // exact rational or %.17g
    bool pass = false;
};

// Samples configurations of t points in R^m and checks that the section is
// nonzero, lands in rho_t^m and is equivariant for a random relabelling. The
// scaling family s * f, s in [0, inf], then contracts the Euler class.
SectionCertificate nullhomotopy_certificate(int m, int t, std::uint64_t samples, std::uint64_t seed,
                                            bool float_mode = false);

nlohmann::json to_json_value(const SectionValue& v);
nlohmann::json to_json_value(const SectionCertificate& c);
Configuration configuration_from_json(const nlohmann::json& j);

} // namespace entriv
