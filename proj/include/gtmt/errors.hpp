#pragma once

#include <stdexcept>
#include <string>

namespace gtmt {

// Violated mathematical precondition (division by zero, bad argument shape, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded before the computation finished.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration (unknown keys, unknown catalog ids, bad flag values).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gtmt
