#pragma once

#include <stdexcept>
#include <string>

namespace mlnim {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data (bad line in an edge-list file, bad CSV schema).
class ParseError : public Error {
 public:
    ParseError(const std::string& msg, long line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const { return line_; }

 private:
    long line_;
};

/// Unknown actor, layer or method identifier.
class LookupError : public Error {
 public:
    using Error::Error;
};

/// Invalid configuration or degenerate request (empty seed set, budget >= 100%,
/// missing file, unknown method id). Maps to CLI exit code 2.
class ConfigError : public Error {
 public:
    using Error::Error;
};

/// Structurally invalid data (empty network, inconsistent rankings).
class StructureError : public Error {
 public:
    using Error::Error;
};

/// Iterative numerics failed to converge.
class NumericalError : public Error {
 public:
    using Error::Error;
};

}  // namespace mlnim
