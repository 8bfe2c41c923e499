#pragma once

#include <stdexcept>
#include <string>

namespace hankel {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlphaOutOfRange : Error {
    using Error::Error;
};

struct InfeasibleInput : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct InsufficientCoefficients : Error {
    using Error::Error;
};

struct UnsupportedFunctional : Error {
    using Error::Error;
};

struct SymbolMismatch : Error {
    using Error::Error;
};

/// Invalid user-facing configuration (CLI flag combinations, grids, ...).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace hankel
