#pragma once

#include <stdexcept>
#include <string>

namespace eep {

// Bad arguments or over-budget requests. Maps to exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant. Maps to exit code 2.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eep
