#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// All artifact errors funnel through this type; the CLI maps it to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int floor_rat(const Rat& r)
{
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);  // always > 0
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline bool is_integral(const Rat& r)
{
    return boost::multiprecision::denominator(r) == 1;
}

// Least integer strictly greater than r; the "r+" ceiling.
inline Int ceil_plus(const Rat& r)
{
    return is_integral(r) ? floor_rat(r) + 1 : ceil_rat(r);
}

inline long long to_ll(const Int& v)
{
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw Error("integer out of 64-bit range");
    return static_cast<long long>(v);
}

}  // namespace mlab
