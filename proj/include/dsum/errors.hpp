#pragma once

#include <stdexcept>
#include <string>

namespace dsum {

// Root of every exception the library throws.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division by zero and similar arithmetic faults.
class arithmetic_error : public error {
 public:
  using error::error;
};

// Caller supplied an invalid value (non-coprime pair, duplicate abscissae,
// degenerate polygon, ...).
class input_error : public error {
 public:
  using error::error;
};

// An enumeration would exceed the configured ceiling.
class resource_error : public error {
 public:
  using error::error;
};

// A truncated series window cannot hold the requested order.
class truncation_error : public error {
 public:
  using error::error;
};

// A regular-branch series was requested at a pole (c divides r).
class branch_error : public error {
 public:
  using error::error;
};

// An invariant that must hold for every valid input was violated.
// Seeing one of these means a bug, not bad input.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace dsum
