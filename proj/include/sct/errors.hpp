#pragma once

#include <stdexcept>
#include <string>

namespace sct {

// Bad or inconsistent input data (files, grids, shapes).
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure (degenerate geometry, non-finite values).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad command-line usage.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sct
