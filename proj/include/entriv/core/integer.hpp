#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <string>

namespace entriv {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer& base, unsigned long exponent)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Integers that fit in a signed 64-bit word serialize as JSON numbers,
// anything larger as a decimal string.
nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

// Rationals serialize as "p/q" strings unless integral.
nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

} // namespace entriv
