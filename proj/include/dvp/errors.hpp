#pragma once

#include <stdexcept>
#include <string>

namespace dvp {

/// Rejected kernel parameters. `reason()` identifies which constraint failed.
class ParameterError : public std::invalid_argument {
 public:
  enum class Reason {
    NegativeR,         // r < 0
    SNotGreaterThanR,  // s <= r
    NotCoprime,        // gcd(r, s) != 1
    NonPositiveN,      // N <= 0
    TooLarge,          // s*N beyond the supported degree range
    Other,
  };

  ParameterError(Reason reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// An adaptive routine ran out of its subdivision budget before reaching tolerance.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed (for example a result that must be real
/// came out with a non-negligible imaginary part).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dvp
