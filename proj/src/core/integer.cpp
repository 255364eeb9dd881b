#include "entriv/core/integer.hpp"

#include "entriv/error.hpp"

#include <limits>

namespace entriv {

nlohmann::json integer_to_json(const Integer& z)
{
    if (mpz_fits_slong_p(z.get_mpz_t()) && sizeof(long) == 8)
        return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

Integer integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0)
            throw InvalidInput("not an integer: " + j.get<std::string>());
        return z;
    }
    throw InvalidInput("expected an integer, got " + j.dump());
}

nlohmann::json rational_to_json(const Rational& q)
{
    if (q.get_den() == 1)
        return integer_to_json(q.get_num());
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_json(const nlohmann::json& j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const auto slash = s.find('/');
        if (slash == std::string::npos)
            return Rational(integer_from_json(j));
        Integer num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0 || den == 0)
            throw InvalidInput("not a rational: " + s);
        return make_rational(num, den);
    }
    if (j.is_number_float())
        throw InvalidInput("rationals must be given exactly, as integers or \"p/q\" strings");
    return Rational(integer_from_json(j));
}

} // namespace entriv
