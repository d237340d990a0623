#pragma once

#include <stdexcept>
#include <string>

namespace weylalt {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rank outside the supported range (rank >= 1).
class InvalidRankError : public Error {
 public:
  using Error::Error;
};

// Index argument outside its documented range.
class InvalidIndexError : public Error {
 public:
  using Error::Error;
};

// A weight violates a precondition (wrong size, nonzero coordinate sum,
// not dominant, not an integral weight, ...).
class InvalidWeightError : public Error {
 public:
  using Error::Error;
};

// Malformed input that is not specifically a weight problem.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A request would exceed an enumeration or budget ceiling.  The message
// names the ceiling so callers know which knob to raise.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace weylalt
