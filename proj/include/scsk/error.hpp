#pragma once

#include <stdexcept>
#include <string>

namespace scsk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text, bad budget, or an instance too large to solve.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Instance violates the no-substring rule (or contains an empty string).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class OracleLimitError : public Error {
 public:
  using Error::Error;
};

/// A reconstructed witness failed its own consistency check. Signals a solver bug.
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace scsk
