#pragma once

#include <stdexcept>

namespace bnet {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mismatched component counts, or a component index outside [1, n].
struct DimensionError : Error {
  using Error::Error;
};

/// A size cap was exceeded (see README for the caps and how --force interacts).
struct SizeError : Error {
  using Error::Error;
};

/// A hypothesis required by the operation does not hold for the input.
struct HypothesisError : Error {
  using Error::Error;
};

/// Malformed file, configuration literal, schedule, or suite name.
struct FormatError : Error {
  using Error::Error;
};

}  // namespace bnet
