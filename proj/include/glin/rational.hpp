#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace glin {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational arithmetic. All cardinalities, matrix entries and
/// determinants in this library are values of this type; there is no
/// floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Render as "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Render always as "num/den" (the exact serialization format).
inline std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace glin
