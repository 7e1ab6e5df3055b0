#pragma once

#include <stdexcept>
#include <string>

namespace shtk {

// Raised on malformed or contradictory user input (bad JSON, invalid
// algebra data, length mismatches).  Maps to exit code 1 at the CLI.
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal invariant is violated.  Maps to exit code 2.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace shtk
