#pragma once

#include <stdexcept>
#include <string>

namespace adinkra {

// Input violates a mathematical precondition (not bipartite, not a dashing
// code, mismatched lengths, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a documented size cap (2^k blowups and friends).
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computations of the same fact disagree.  Always a bug.
struct ConsistencyError : std::logic_error {
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace adinkra
