#pragma once

#include <stdexcept>
#include <string>

namespace kswave {

// Base for every error raised by the library. Callers that only want to
// report failures can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on an argument failed (nonpositive parameter, bad size, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Two fields that must share a grid do not.
class GridMismatch : public Error {
public:
    using Error::Error;
};

// A sampled field left its admissible region by more than the tolerance,
// or a numerical guarantee of a solver was broken.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// Scenario / configuration problems surfaced by the CLI layer.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace kswave
