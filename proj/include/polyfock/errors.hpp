#pragma once

#include <stdexcept>

namespace polyfock {

/// Raised when two independent computation paths that must agree exactly
/// (closed form vs Gram computation, monomial vs basis-expansion
/// projection) produce different results.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace polyfock
