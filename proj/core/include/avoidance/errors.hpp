#pragma once

#include <stdexcept>
#include <string>

namespace avoidance {

// Malformed input: bad word/pattern text, letters out of range, bad grid bounds.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The resource guard refused a search space (k^n candidate words) above the ceiling.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A claim evaluated at a point outside its stated validity domain.
class OutsideValidity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A bijection was handed a word outside the avoidance class it is defined on.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A cached file does not match the expected schema or is corrupt.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lookup of an unregistered claim id.
class UnknownClaim : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace avoidance
