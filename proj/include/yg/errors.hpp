#pragma once

#include <stdexcept>
#include <string>

namespace yg {

// Malformed input: out-of-range letters, non-partitions, bad matrices, ...
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap (tensor dimension, enumeration size) would be
// exceeded.  Callers should refuse rather than thrash.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure: non-convergent iteration, divergent series.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace yg
