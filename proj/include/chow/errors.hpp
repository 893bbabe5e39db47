#pragma once

#include <stdexcept>
#include <string>

namespace chow {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent user input: unparseable documents, invalid
/// polytopes, unknown cone references, non-generic one-parameter subgroups.
/// The CLI reports these with exit code 2.
struct InputError : Error {
    using Error::Error;
};

/// An exact internal cross-check failed. These checks (sample agreement of
/// Chern numbers, linearity of reconstructed weight coefficients) can only
/// trip on a bug, never on valid input. The CLI reports exit code 3.
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace chow
