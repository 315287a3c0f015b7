#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace eqcomm {

// Exact arbitrary-precision rational; boost keeps it canonical (reduced,
// positive denominator).
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace eqcomm
