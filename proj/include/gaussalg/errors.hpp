#pragma once

#include <stdexcept>
#include <string>

namespace gaussalg {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands live in different ambient dimensions.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// divide_exact asked to divide by a non-divisor.
struct NotDivisible : Error {
  using Error::Error;
};

/// determinant of a non-square matrix requested.
struct NotSquare : Error {
  using Error::Error;
};

/// An exact integer computation left the representable range.
struct ArithmeticOverflow : Error {
  using Error::Error;
};

/// Invalid degree parameter (e.g. squarefree degree above the dimension).
struct InvalidDegree : Error {
  using Error::Error;
};

/// Generic precondition violation on a parameter.
struct InvalidArgument : Error {
  using Error::Error;
};

/// Closed-form description requested outside the range where it is known to hold.
struct OutOfProvenRange : Error {
  using Error::Error;
};

/// Partition has more parts than the requested ambient dimension.
struct TooManyParts : Error {
  using Error::Error;
};

/// Generator family spans a space of too small a rank.
struct RankDeficient : Error {
  using Error::Error;
};

/// Target degree is incompatible with the requested generator degree.
struct DegreeMismatch : Error {
  using Error::Error;
};

/// A set operation that requires a common degree met mixed degrees.
struct MixedDegrees : Error {
  using Error::Error;
};

/// A set operation that requires a nonempty set met an empty one.
struct EmptySet : Error {
  using Error::Error;
};

/// No valid pair of reduction indices exists for this monomial.
struct NoValidPair : Error {
  using Error::Error;
};

/// Lift indices are out of range or equal.
struct InvalidIndices : Error {
  using Error::Error;
};

/// Symbolic expansion requested beyond the supported size.
struct TooLarge : Error {
  using Error::Error;
};

}  // namespace gaussalg
