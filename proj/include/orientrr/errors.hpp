#pragma once

#include <stdexcept>

namespace orientrr {

// Base class for every domain error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

// Series errors.
struct ZeroConstantTerm : Error {
  using Error::Error;
};
struct NonzeroConstantTerm : Error {
  using Error::Error;
};
struct NotReversible : Error {
  using Error::Error;
};
struct BadConstantTerm : Error {
  using Error::Error;
};
// Thrown when a truncated series does not carry enough coefficients to make
// the requested result exact. Unknown coefficients are never treated as zero.
struct InsufficientOrder : Error {
  using Error::Error;
};

// Orientation errors.
struct UnknownOrientation : Error {
  using Error::Error;
};
struct InvalidOrientation : Error {
  using Error::Error;
};

// Ring and bundle errors.
struct ShapeMismatch : Error {
  using Error::Error;
};
struct NonNilpotentArgument : Error {
  using Error::Error;
};
struct VirtualBundle : Error {
  using Error::Error;
};
struct InvalidBundle : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};

// Pushforward and verification errors.
struct BadMapKind : Error {
  using Error::Error;
};
struct NonIntegerResult : Error {
  using Error::Error;
};
struct UnknownSuite : Error {
  using Error::Error;
};

}  // namespace orientrr
