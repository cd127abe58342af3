#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boltcheb {

// Malformed caller input: bad shapes, labels out of range, unparsable files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A failure that valid inputs must never trigger (solver iteration cap, ...).
class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConsecutiveDuplicateError : public InputError {
public:
    ConsecutiveDuplicateError(std::size_t position, const std::string& what)
        : InputError(what), position(position) {}
    std::size_t position;
};

class BrokenChainError : public InputError {
public:
    BrokenChainError(std::size_t position, const std::string& what)
        : InputError(what), position(position) {}
    std::size_t position;
};

class NotClosableError : public InputError {
public:
    using InputError::InputError;
};

class NotClosedError : public InputError {
public:
    using InputError::InputError;
};

// Residual signs on a closed bolt fit neither global alternating parity.
class SignViolationError : public InputError {
public:
    SignViolationError(std::size_t first, std::size_t second, const std::string& what)
        : InputError(what), first(first), second(second) {}
    std::size_t first;   // bolt positions of the offending pair
    std::size_t second;
};

class ZeroResidualError : public InputError {
public:
    using InputError::InputError;
};

class NotProductSpaceError : public InputError {
public:
    using InputError::InputError;
};

class GuardExceededError : public InputError {
public:
    using InputError::InputError;
};

// The alternating sweep finished without matching the dual value.
class NonConvergenceError : public std::runtime_error {
public:
    NonConvergenceError(double error, double dual_value, const std::string& what)
        : std::runtime_error(what), error(error), dual_value(dual_value) {}
    double error;
    double dual_value;
};

}  // namespace boltcheb
