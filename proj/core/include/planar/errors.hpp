#pragma once

#include <stdexcept>
#include <string>

namespace planar {

/// An input violated a mathematical precondition (wrong alphabet, singular
/// linear part, non-regular conjugate field, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A serialized document could not be read.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace planar
