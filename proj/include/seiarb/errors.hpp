#pragma once

#include <stdexcept>
#include <string>

namespace seiarb {

// Invalid configuration, parameters, or input files. CLI exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure during evaluation or integration. CLI exit code 2.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mathematically invalid arguments fed to a kernel (non-finite state,
// out-of-range control). A species of numeric failure.
class DomainError : public NumericError {
 public:
  explicit DomainError(const std::string& msg) : NumericError(msg) {}
};

}  // namespace seiarb
