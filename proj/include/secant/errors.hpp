#pragma once

#include <stdexcept>
#include <string>

namespace secant {

/// Invalid caller-supplied input: bad CLI flags, malformed manifests, or a
/// violated operation precondition.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Violation of an internal invariant. Signals a formula or construction bug,
/// never bad user input.
struct ConsistencyError : std::logic_error {
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace secant
