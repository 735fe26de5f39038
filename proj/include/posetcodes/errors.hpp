#pragma once

#include <stdexcept>
#include <string>

namespace posetcodes {

// Raised when a poset, ideal or code parameter is outside its legal range.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive routine is asked for an n above its cost cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Raised for operations that are undefined on the zero code.
class DegenerateCodeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace posetcodes
