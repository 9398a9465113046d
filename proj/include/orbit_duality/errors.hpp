#pragma once

#include <stdexcept>
#include <string>

namespace orbit_duality {

// Raised when an input violates a documented precondition (wrong type,
// wrong size parity, unknown label, malformed text). The CLI maps it to
// exit code 2.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when embedded data or an internal invariant is found broken.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace orbit_duality
