#pragma once

#include <stdexcept>
#include <string>

namespace secrecy {

/// Input data violates a type invariant (unnormalized pmf, negative gain, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called with arguments outside its contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical result broke an internal invariant (e.g. MI clearly negative).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace secrecy

namespace secrecy {

/// A configuration document or command line is malformed. The message names
/// the offending field.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace secrecy
