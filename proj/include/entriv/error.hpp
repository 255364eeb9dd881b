#pragma once

#include <stdexcept>
#include <string>

namespace entriv {

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on the input was violated (bad shape, out-of-range parameter,
// malformed JSON, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A configured resource limit (basis size, materialization cap) was exceeded.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

} // namespace entriv
