#pragma once

#include <stdexcept>
#include <string>

namespace mohboa {

/// Raised when an operation receives arguments outside its domain.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an object is used in a state that does not permit the call
/// (stepping a finished run, sampling a cyclic model, comparing unranked
/// individuals).
class InvalidState : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mohboa
