#pragma once

#include <stdexcept>
#include <string>

namespace spechtkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sequence that should be a partition is not one.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Bad modulus, bead count or other configuration parameter.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Two partitions (or modules) that must have equal size do not.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// The input is valid but outside the domain of the operation
/// (e.g. Mullineux of a p-singular partition, label of a reducible module).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation ran out of its configured budget without a verdict.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug or a violated theorem.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace spechtkit
