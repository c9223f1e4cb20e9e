#pragma once

#include <stdexcept>
#include <string>

namespace ribbonfold {

/// Invalid argument or out-of-domain parameter (CLI exit code 2).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A geometric constraint of a construction is violated, e.g. the
/// escape-accordion clearance (CLI exit code 3).
class ConstraintError : public std::runtime_error {
public:
    explicit ConstraintError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical routine failed to converge or lost its bracket (CLI exit code 4).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed serialized document.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Serialized document with an unrecognized schema version.
class VersionError : public std::runtime_error {
public:
    explicit VersionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ribbonfold
