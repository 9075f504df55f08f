#pragma once

#include <stdexcept>

namespace kaleido {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration or arguments (CLI exit code 2).
struct config_error : error {
    using error::error;
};

// Dimension mismatch between matrices, parameters, or documents.
struct shape_error : config_error {
    using config_error::config_error;
};

// Non-finite values where finite numbers are required (CLI exit code 3).
struct divergence_error : error {
    using error::error;
};

// Filesystem failures (CLI exit code 4).
struct io_error : error {
    using error::error;
};

// Malformed input documents: model files, CSV, IDX (CLI exit code 4).
struct parse_error : io_error {
    using io_error::io_error;
};

} // namespace kaleido
