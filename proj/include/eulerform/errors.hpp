#pragma once

#include <stdexcept>
#include <string>

namespace eulerform {

// Exit-code mapping used by the CLI: ConfigError and UsageError -> 2;
// NumericError, BlowupError and DomainError (state left the EOS domain) -> 3.

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an evolution produces non-finite values, or when a simple-wave
/// query is made at or after the blowup time.
class BlowupError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace eulerform
