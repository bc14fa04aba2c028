#pragma once

#include <stdexcept>
#include <string>

namespace qtele {

// Caller violated a precondition (width mismatch, bad qubit index, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Register would exceed the configured qubit capacity.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A numerical invariant broke inside the library (e.g. normalization drift).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qtele
