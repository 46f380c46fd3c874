#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace ncdegen {

// Exact arithmetic everywhere; no floating point in any computation path.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "3", "-3" or "3/4" (reduced form, denominator omitted when 1).
inline std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace ncdegen
