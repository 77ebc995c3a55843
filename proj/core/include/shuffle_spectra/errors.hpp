#pragma once

#include <stdexcept>
#include <string>

namespace shuffle_spectra {

/// A precondition on an argument was violated (out-of-range row, bad shape, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request exceeds a documented size guard (state space, enumeration size).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative numeric routine failed to converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace shuffle_spectra
