#pragma once

#include <stdexcept>
#include <string>

namespace hankel {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series reversion requires f(0) = 0 and f'(0) != 0.
struct NotRevertible : Error {
    using Error::Error;
};

// A sequence operation needed more prefix terms than are present.
struct InsufficientPrefix : Error {
    using Error::Error;
};

// An index argument fell outside its documented range.
struct IndexOutOfRange : Error {
    using Error::Error;
};

// A three-term coefficient set has no first moment yet.
struct UnsetMoment : Error {
    using Error::Error;
};

// A three-term coefficient operation needed more coefficients than present.
struct InsufficientCoeffs : Error {
    using Error::Error;
};

// Weight scaling with an illegal factor (C = 0, or affine a <= 0).
struct InvalidScale : Error {
    using Error::Error;
};

// An r-sequence step would divide by a vanished r_{n-1}; marks a vanishing
// Hankel minor for the shifted weight.
struct DivisionByZeroR : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

// Malformed textual input (b-file line, rational literal, ...).
struct ParseError : Error {
    using Error::Error;
};

// Non-contiguous index column in a b-file.
struct GapError : Error {
    using Error::Error;
};

// Unusable run configuration (empty grid, unknown identity id, ...).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace hankel
