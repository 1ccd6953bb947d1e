#pragma once

#include <stdexcept>
#include <string>

namespace ssg {

/// Malformed user input: Cartan types, weights, command-line arguments.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computation that could not be carried out on valid input.
class ComputationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Integer arithmetic left the 64-bit range.
class OverflowError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

/// Subgroup enumeration was asked for a group above the configured cap.
class EnumerationCapError : public ComputationError {
public:
  using ComputationError::ComputationError;
};

}  // namespace ssg
