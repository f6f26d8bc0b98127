#pragma once

#include <stdexcept>

namespace bgrass {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid domain value or violated call contract.
struct ValidationError : Error {
    using Error::Error;
};

// Malformed text input; the message names the offending token.
struct ParseError : Error {
    using Error::Error;
};

// An internal consistency check failed on data that should make it impossible.
struct InvariantError : Error {
    using Error::Error;
};

// Computation rejected because it exceeds a configured rank bound.
struct ResourceLimitError : Error {
    using Error::Error;
};

} // namespace bgrass
