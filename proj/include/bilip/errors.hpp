#pragma once

#include <stdexcept>
#include <string>

namespace bilip {

// Bad user input: malformed polynomials, unknown variables, out-of-range
// arguments. The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated internal invariant (a bug, not a user mistake). Exit code 3.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace bilip
