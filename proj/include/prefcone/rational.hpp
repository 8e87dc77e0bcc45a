#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "prefcone/errors.hpp"

namespace prefcone {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps values reduced with a positive
// denominator, which is exactly the canonical form required here.
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

inline Int numerator_of(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Int denominator_of(const Rational& x) { return boost::multiprecision::denominator(x); }

/// Accepts "p" or "p/q" with optional leading '-'. q must be positive after
/// normalization; "p/0" is rejected.
Rational parse_rational(const std::string& text);

/// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& x);

} // namespace prefcone
