#pragma once

#include <stdexcept>
#include <string>

namespace divinfo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A probability vector failed validation (negative entry, bad sum, empty).
class InvalidDistribution : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class TooLargeForExhaustive : public Error {
 public:
  using Error::Error;
};

/// Requested quantity has no exact algorithm for the given input.
class NotComputableExactly : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// Closed-form bound evaluated outside the domain where it is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NotPositiveSemidefinite : public Error {
 public:
  using Error::Error;
};

}  // namespace divinfo
