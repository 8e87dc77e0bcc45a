#pragma once

#include <stdexcept>
#include <string>

namespace prefcone {

/// Input could not be parsed (bad JSON, malformed rational, malformed sign string).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was called outside its contract (dimension mismatch,
/// unvalidated cone, non-weak input, cap exceeded).
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant was falsified. This never indicates bad input: it is
/// a certificate that the implementation itself is wrong.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Default cap on the ambient dimension accepted by the generator<->constraint
/// conversions.
inline constexpr int kDimensionCap = 8;

/// Default cap on the number of constraint rows subject to full 3^m sign
/// enumeration. Overridable through the environment (see sign_enum_cap()).
inline constexpr int kSignEnumCap = 8;

/// Effective 3^m enumeration cap: kSignEnumCap unless the environment
/// variable PREFCONE_SIGN_ENUM_CAP holds a positive integer.
int sign_enum_cap();

} // namespace prefcone
