#pragma once

#include <stdexcept>
#include <string>

namespace odflow {

// Error taxonomy. The CLI maps these onto exit codes: data/validation
// problems exit 1, usage problems exit 2, anything else exit 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input value outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Tensor/raster dimension mismatch.
struct ShapeError : Error {
  using Error::Error;
};

// Malformed file contents (bad magic, wrong record layout).
struct FormatError : Error {
  using Error::Error;
};

// Text input that cannot be parsed; message carries path and line.
struct ParseError : Error {
  using Error::Error;
};

// Filesystem or network failure.
struct IoError : Error {
  using Error::Error;
};

// Caller misuse of an API or CLI surface.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace odflow
