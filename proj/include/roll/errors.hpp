#pragma once

#include <stdexcept>

namespace roll {

// Bad shapes, bad arguments, malformed files. The CLI maps this to a usage
// exit code.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A numeric check or tolerance failed at runtime (stale trace, divergence,
// engine disagreement). The CLI maps this to the failure exit code.
struct CheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace roll
