#pragma once

#include <stdexcept>
#include <string>

namespace wick {

/// Malformed or inconsistent user input (files, expressions, charts).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact arithmetic failure: zero divisor, singular substitution.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A self-check that must hold by construction failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wick
