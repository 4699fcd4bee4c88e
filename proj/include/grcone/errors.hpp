#pragma once

#include <stdexcept>
#include <string>

namespace grcone {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A value violates a structural invariant (bad filtration, composite
/// characteristic, inconsistent cover model, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// An index or parameter is outside its admissible range.
struct RangeError : Error {
    using Error::Error;
};

/// Malformed input text (bad JSON, wrong field types).
struct ParseError : Error {
    using Error::Error;
};

} // namespace grcone
