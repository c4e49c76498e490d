#pragma once

#include <stdexcept>
#include <string>

namespace gencx {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad parameters, degenerate forms).
struct ParameterError : Error {
  using Error::Error;
};

/// Operand shapes do not match.
struct DimensionError : Error {
  using Error::Error;
};

/// An exact computation would need an irrational number; rerun in float mode.
struct ExactnessError : Error {
  using Error::Error;
};

/// A structure that was expected to be generalized complex is not.
struct VerificationError : Error {
  using Error::Error;
};

/// Malformed input document (JSON, structure equations).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace gencx
