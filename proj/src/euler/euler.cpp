#include "entriv/euler/euler.hpp"

#include "entriv/error.hpp"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <optional>
#include <string>
#include <type_traits>

namespace entriv {

namespace {

bool same_point(const std::vector<Rational>& a, const std::vector<Rational>& b) { return a == b; }

bool same_point(const std::vector<double>& a, const std::vector<double>& b)
{
    double d2 = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d2 += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(d2) <= kFloatTolerance;
}

template <class Scalar>
void validate(const BasicConfiguration<Scalar>& c)
{
    if (c.m < 1)
        throw InvalidInput("ambient dimension m must be at least 1");
    if (c.points.size() < 2)
        throw InvalidInput("configurations need at least two points");
    for (const auto& p : c.points)
        if (static_cast<int>(p.size()) != c.m)
            throw InvalidInput("every point needs m = " + std::to_string(c.m) + " coordinates");
    for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t j = i + 1; j < c.points.size(); ++j)
            if (same_point(c.points[i], c.points[j]))
                throw InvalidInput("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
}

template <class Scalar>
BasicSectionValue<Scalar> eval(const BasicConfiguration<Scalar>& c)
{
    validate(c);
    const std::size_t t = c.points.size();
    BasicSectionValue<Scalar> v;
    for (int i = 0; i < c.m; ++i) {
        Scalar mean = 0;
        for (const auto& p : c.points)
            mean += p[static_cast<std::size_t>(i)];
        mean /= static_cast<double>(t);
        std::vector<Scalar> f(t);
        for (std::size_t s = 0; s < t; ++s)
            f[s] = c.points[s][static_cast<std::size_t>(i)] - mean;
        v.components.push_back(std::move(f));
    }
    return v;
}

template <class Vec>
Vec permute(const Permutation& sigma, const Vec& v)
{
    if (sigma.size() != v.size() || !is_permutation(sigma))
        throw InvalidInput("relabelling must be a permutation of the point labels");
    Vec out(v.size());
    for (std::size_t t = 0; t < v.size(); ++t)
        out[static_cast<std::size_t>(sigma[t])] = v[t];
    return out;
}

template <class Value>
Value act_value(const Permutation& sigma, const Value& v)
{
    Value out;
    for (const auto& f : v.components)
        out.components.push_back(permute(sigma, f));
    return out;
}

bool close(const Rational& a, const Rational& b) { return a == b; }
bool close(double a, double b) { return std::abs(a - b) <= kFloatTolerance; }

template <class Config>
EquivarianceReport equivariance(const Config& c, const Permutation& sigma)
{
    const auto v = section_eval(c);
    const auto moved = section_eval(act(sigma, c));
    const auto expected = act(sigma, v);
    EquivarianceReport r;
    r.equivariant = true;
    for (std::size_t i = 0; i < moved.components.size(); ++i)
        for (std::size_t t = 0; t < moved.components[i].size(); ++t)
            r.equivariant = r.equivariant && close(moved.components[i][t], expected.components[i][t]);
    r.components_sum_to_zero = true;
    for (const auto& f : v.components) {
        typename std::decay_t<decltype(f)>::value_type sum = 0;
        for (const auto& x : f)
            sum += x;
        if constexpr (std::is_same_v<std::decay_t<decltype(sum)>, double>)
            r.components_sum_to_zero = r.components_sum_to_zero && std::abs(sum) <= kFloatTolerance * static_cast<double>(f.size());
        else
            r.components_sum_to_zero = r.components_sum_to_zero && sum == 0;
    }
    if constexpr (std::is_same_v<Config, Configuration>)
        r.nonzero = !is_zero(v);
    else
        r.nonzero = std::sqrt(norm_squared(v)) > kFloatTolerance;
    r.pass = r.equivariant && r.components_sum_to_zero && r.nonzero;
    return r;
}

} // namespace

SectionValue section_eval(const Configuration& c) { return eval(c); }
FloatSectionValue section_eval(const FloatConfiguration& c) { return eval(c); }

bool is_zero(const SectionValue& v)
{
    for (const auto& f : v.components)
        for (const auto& x : f)
            if (sgn(x) != 0)
                return false;
    return true;
}

Rational norm_squared(const SectionValue& v)
{
    Rational s = 0;
    for (const auto& f : v.components)
        for (const auto& x : f)
            s += x * x;
    return s;
}

double norm_squared(const FloatSectionValue& v)
{
    double s = 0;
    for (const auto& f : v.components)
        for (double x : f)
            s += x * x;
    return s;
}

Configuration act(const Permutation& sigma, const Configuration& c) { return {c.m, permute(sigma, c.points)}; }
FloatConfiguration act(const Permutation& sigma, const FloatConfiguration& c) { return {c.m, permute(sigma, c.points)}; }
SectionValue act(const Permutation& sigma, const SectionValue& v) { return act_value(sigma, v); }
FloatSectionValue act(const Permutation& sigma, const FloatSectionValue& v) { return act_value(sigma, v); }

EquivarianceReport equivariance_test(const Configuration& c, const Permutation& sigma) { return equivariance(c, sigma); }
EquivarianceReport equivariance_test(const FloatConfiguration& c, const Permutation& sigma)
{
    return equivariance(c, sigma);
}

Permutation random_permutation(Rng& rng, int n)
{
    Permutation p = identity_permutation(n);
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.uniform(0, i))]);
    return p;
}

Configuration random_configuration(Rng& rng, int m, int t)
{
    for (;;) {
        Configuration c{m, {}};
        for (int s = 0; s < t; ++s) {
            std::vector<Rational> p;
            for (int i = 0; i < m; ++i)
                p.push_back(make_rational(Integer(static_cast<long>(rng.uniform(-64, 64))),
                                          Integer(static_cast<long>(rng.uniform(1, 16)))));
            c.points.push_back(std::move(p));
        }
        bool distinct = true;
        for (int a = 0; a < t && distinct; ++a)
            for (int b = a + 1; b < t && distinct; ++b)
                distinct = c.points[static_cast<std::size_t>(a)] != c.points[static_cast<std::size_t>(b)];
        if (distinct)
            return c;
    }
}

FloatConfiguration random_float_configuration(Rng& rng, int m, int t)
{
    for (;;) {
        FloatConfiguration c{m, {}};
        for (int s = 0; s < t; ++s) {
            std::vector<double> p;
            for (int i = 0; i < m; ++i)
                p.push_back(static_cast<double>(rng.next() >> 11) * 0x1.0p-53 * 2.0 - 1.0);
            c.points.push_back(std::move(p));
        }
        bool distinct = true;
        for (int a = 0; a < t && distinct; ++a)
            for (int b = a + 1; b < t && distinct; ++b)
                distinct = !same_point(c.points[static_cast<std::size_t>(a)], c.points[static_cast<std::size_t>(b)]);
        if (distinct)
            return c;
    }
}

SectionCertificate nullhomotopy_certificate(int m, int t, std::uint64_t samples, std::uint64_t seed, bool float_mode)
{
    if (m < 1)
        throw InvalidInput("m must be at least 1");
    if (t < 2 || t > kMaxSymmetricRank)
        throw InvalidInput("|T| must lie in 2.." + std::to_string(kMaxSymmetricRank));
    SectionCertificate cert;
    cert.m = m;
    cert.t = t;
    cert.samples = samples;
    cert.seed = seed;
    cert.float_mode = float_mode;
    cert.copies_of_rho = m;
    Rng rng(seed);
    std::optional<Rational> min_exact;
    double min_float = INFINITY;
    for (std::uint64_t k = 0; k < samples; ++k) {
        const Permutation sigma = random_permutation(rng, t);
        if (float_mode) {
            const auto c = random_float_configuration(rng, m, t);
            if (!equivariance_test(c, sigma).pass)
                ++cert.failures;
            min_float = std::min(min_float, norm_squared(section_eval(c)));
        } else {
            const auto c = random_configuration(rng, m, t);
            if (!equivariance_test(c, sigma).pass)
                ++cert.failures;
            const Rational n2 = norm_squared(section_eval(c));
            if (!min_exact || n2 < *min_exact)
                min_exact = n2;
        }
    }
    if (float_mode) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", samples ? min_float : 0.0);
        cert.min_norm_squared = buf;
        cert.pass = cert.failures == 0 && (samples == 0 || std::sqrt(min_float) > kFloatTolerance);
    } else {
        cert.min_norm_squared = min_exact ? rational_to_json(*min_exact).dump() : "0";
        if (!cert.min_norm_squared.empty() && cert.min_norm_squared.front() == '"')
            cert.min_norm_squared = cert.min_norm_squared.substr(1, cert.min_norm_squared.size() - 2);
        cert.pass = cert.failures == 0 && (samples == 0 || sgn(*min_exact) > 0);
    }
    return cert;
}

nlohmann::json to_json_value(const SectionValue& v)
{
    auto out = nlohmann::json::array();
    for (const auto& f : v.components) {
        auto row = nlohmann::json::array();
        for (const auto& x : f)
            row.push_back(rational_to_json(x));
        out.push_back(std::move(row));
    }
    return out;
}

nlohmann::json to_json_value(const SectionCertificate& c)
{
    return {{"m", c.m},
            {"t", c.t},
            {"samples", c.samples},
            {"seed", c.seed},
            {"arithmetic", c.float_mode ? "float" : "exact"},
            {"copies_of_rho", c.copies_of_rho},
            {"section", "f_i = i-th coordinates minus their mean, i = 1..m"},
            {"homotopy", "s * f for s in [0, inf] joins the zero section to infinity"},
            {"arity_reduction", "precompose with the forgetful map Conf_n -> Conf_T"},
            {"failures", c.failures},
            {"min_norm_squared", c.min_norm_squared},
            {"pass", c.pass}};
}

Configuration configuration_from_json(const nlohmann::json& j)
{
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw InvalidInput("configuration must be an array of points");
    Configuration c;
    c.m = static_cast<int>(j[0].size());
    for (const auto& p : j) {
        std::vector<Rational> pt;
        for (const auto& x : p)
            pt.push_back(rational_from_json(x));
        c.points.push_back(std::move(pt));
    }
    return c;
}

} // namespace entriv
