#pragma once

#include <stdexcept>
#include <string>

namespace asdv {

// Invalid argument to a library operation (non-prime p, wrong domain, ...).
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A computed quantity violated a consistency condition that no valid input
// can trigger; signals a bug upstream, not bad input.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Requested data lies beyond the retained truncation of a series.
struct CoverageError : std::runtime_error {
  CoverageError(const std::string& what, long long max_supported)
      : std::runtime_error(what), max_supported_index(max_supported) {}
  long long max_supported_index;
};

// Bad run configuration or CLI usage.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace asdv
