#pragma once

#include <stdexcept>
#include <string>

namespace bispan {

/// Malformed or out-of-contract input (bad indices, empty sides, invalid params).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Problem size exceeds an enumeration cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An iterative method failed to meet its tolerance. Carries the best
/// estimate seen so callers can still report something.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

/// A self-check failed. Always a defect in this library, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bispan
