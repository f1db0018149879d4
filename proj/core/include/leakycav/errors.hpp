#pragma once

#include <stdexcept>
#include <string>

namespace leakycav {

// Bad inputs: violated preconditions, malformed scenarios, unknown keys/units.
// The CLI maps these to exit code 2.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Failures of the numerics themselves: instability, non-convergence,
// degenerate denominators. The CLI maps these to exit code 3.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class instability_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

class unresolved_region_error : public numerical_error {
public:
    using numerical_error::numerical_error;
};

} // namespace leakycav
