#pragma once

#include <stdexcept>
#include <string>

namespace folcone {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad file, schema violation, dimension mismatch).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A computation finished but a required property did not hold (overlapping fan, ...).
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace folcone
