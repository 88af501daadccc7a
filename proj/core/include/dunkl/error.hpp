#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

// Precondition violations (bad k, t <= 0, p < 1, ...) throw std::invalid_argument.
// The types below signal numerical trouble the caller may want to tell apart.

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grid truncation loses more than the declared tolerance.
class TruncationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Node doubling, series tails or basis tails failed to settle.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class OverflowError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}
}  // namespace detail

}  // namespace dunkl
