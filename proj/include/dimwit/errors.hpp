#pragma once

#include <stdexcept>

namespace dimwit {

// Inconsistent or malformed inputs: shape mismatches, broken invariants.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Scalar argument outside its allowed range.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// A matrix required to be positive semi-definite is not.
struct PositivityError : std::domain_error {
  using std::domain_error::domain_error;
};

// An enumeration would exceed the configured cap.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// Witness shape not handled by the requested algorithm.
struct UnsupportedWitnessError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Numerical breakdown inside an iterative routine.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dimwit
