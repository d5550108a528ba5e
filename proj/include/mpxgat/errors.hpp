#pragma once

#include <stdexcept>
#include <string>

namespace mpxgat {

// Error taxonomy mirrored by CLI exit codes:
//   InputError -> 2, NumericError -> 3, InternalError -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed files, bad arguments, graph validation failures.
struct InputError : Error {
    using Error::Error;
};

// NaN/Inf produced by a numeric op, divergence during training.
struct NumericError : Error {
    using Error::Error;
};

// Broken internal invariant; always a bug.
struct InternalError : Error {
    using Error::Error;
};

} // namespace mpxgat
