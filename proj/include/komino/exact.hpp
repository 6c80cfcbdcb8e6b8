#pragma once

// Exact arbitrary-precision arithmetic used throughout the library.
//
// Every count, series coefficient, and identity check is computed over these
// types; floating point only ever appears in the explicitly-float validation
// route (hyperid.hpp), never in a counting path.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace komino {

using Int = boost::multiprecision::cpp_int;
// cpp_rational keeps values canonical: always reduced, denominator positive.
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(Int base, unsigned long long exp) {
    Int r = 1;
    while (exp) {
        if (exp & 1ULL) r *= base;
        base *= base;
        exp >>= 1ULL;
    }
    return r;
}

inline bool is_integer(const Rat& q) {
    return boost::multiprecision::denominator(q) == 1;
}

// Narrow a rational to an integer; throws if it has a fractional part.
inline Int rat_to_int(const Rat& q) {
    if (!is_integer(q)) {
        throw std::domain_error("rat_to_int: value is not an integer: " + q.str());
    }
    return boost::multiprecision::numerator(q);
}

inline std::string to_string(const Int& v) { return v.str(); }

// Canonical "p/q" form; integers render without the "/1".
inline std::string to_string(const Rat& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace komino
