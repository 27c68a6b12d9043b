#pragma once

#include <stdexcept>
#include <string>

namespace latframe {

// Rejected input or a violated precondition (bad shape, malformed rational,
// singular generator, ...). The CLI maps this family to exit code 2.
class InvalidInput : public std::runtime_error {
public:
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public InvalidInput {
public:
    explicit DimensionError(const std::string& msg) : InvalidInput(msg) {}
};

class ParseError : public InvalidInput {
public:
    explicit ParseError(const std::string& msg) : InvalidInput(msg) {}
};

class SingularMatrixError : public InvalidInput {
public:
    explicit SingularMatrixError(const std::string& msg) : InvalidInput(msg) {}
};

// Operation that only makes sense for rational lattices was asked of a
// lattice declared non-rational.
class NotApplicableError : public InvalidInput {
public:
    explicit NotApplicableError(const std::string& msg) : InvalidInput(msg) {}
};

// A computed result failed one of the library's own consistency checks.
// Never expected on any input; the CLI maps this to exit code 3.
class SelfCheckFailure : public std::logic_error {
public:
    explicit SelfCheckFailure(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace latframe
