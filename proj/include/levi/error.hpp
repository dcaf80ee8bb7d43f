#pragma once

#include <stdexcept>
#include <string>

namespace levi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands whose dimensions do not fit together.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, data files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed a declared size cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace levi
