#pragma once

#include <stdexcept>
#include <string>

namespace gyro {

// Bad arguments: unknown elements, empty generator sets, malformed input.
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The table is not (or cannot act as) a gyro-group.
struct structure_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact searches refuse graphs beyond their size cap.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Catalog key not found; message lists known keys.
struct lookup_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gyro
