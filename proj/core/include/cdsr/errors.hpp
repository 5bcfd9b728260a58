#pragma once

#include <stdexcept>
#include <string>

namespace cdsr {

// Base class for all library errors. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Tensor shape disagreement or rank violation.
struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// NaN/Inf produced by an op, fully-masked softmax row, degenerate solver input.
struct NumericError : Error {
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

// Malformed input files (TSV rows, checkpoints, logs).
struct DataError : Error {
  explicit DataError(const std::string& msg) : Error(msg) {}
};

// Invalid configuration; message carries the offending field path.
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace cdsr
