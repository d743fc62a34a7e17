#pragma once

#include <stdexcept>
#include <string>

namespace fleetopt {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance files / schema problems; the message names the offending entity.
class LoadError : public Error {
 public:
  using Error::Error;
};

/// A solution violates the permutation encoding.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A solver configuration violates its invariants.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem / IO failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fleetopt
