#pragma once

#include <stdexcept>
#include <string>

namespace mflab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects that must share a TorusGrid do not.
class GridMismatchError : public Error {
 public:
  using Error::Error;
};

/// A scale, bump or interval is too fine for the lattice.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the inputs does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of the functional (e.g. empty sequence).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input too large for a brute-force method.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// The input makes a decomposition degenerate (e.g. the whole torus is selected).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A rough multiplier description is malformed.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Bad experiment id, flag or configuration value.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace mflab
