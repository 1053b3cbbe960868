#pragma once

#include <stdexcept>
#include <string>

namespace ordmon {

// Bad input values: out-of-range points, malformed words, wrong family, ...
struct ValidationError : std::invalid_argument {
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Operation is well-formed but not provided for the requested family.
struct UnsupportedError : std::invalid_argument {
  explicit UnsupportedError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured cap (candidate count, state count, trace steps) was hit.
// Callers decide whether this is a failure or a reportable outcome.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Termination guard of a rewriting strategy fired.
struct StepCapError : std::runtime_error {
  explicit StepCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ordmon
