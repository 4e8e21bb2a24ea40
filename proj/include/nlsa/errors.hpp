#pragma once

#include <stdexcept>
#include <string>

namespace nlsa {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vector/matrix shapes or ambient dimensions do not match.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A basis index lies outside [0, m+k).
struct InvalidIndex : Error {
    using Error::Error;
};

/// A constructor or operation received inconsistent parameters.
struct ParameterError : Error {
    using Error::Error;
};

/// A file or JSON document violates the algebra schema.
struct ParseError : Error {
    using Error::Error;
};

/// A computation exceeds the configured solver limits.
struct CapacityError : Error {
    using Error::Error;
};

/// The requested quantity is not defined for this input.
struct NotApplicable : Error {
    using Error::Error;
};

}  // namespace nlsa
