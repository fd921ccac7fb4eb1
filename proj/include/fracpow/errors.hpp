#pragma once

#include <stdexcept>
#include <string>

namespace fracpow {

/// Input violates a documented precondition (malformed file, bad parameters).
class InvalidInput : public std::runtime_error {
public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

/// Instance exceeds a configured oracle cap.
class TooLarge : public std::runtime_error {
public:
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Resampling budget exhausted; the caller is expected to escalate the list
/// length and retry.
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An invariant that the construction guarantees was observed to fail at
/// runtime. Indicates a bug upstream, not a user error.
class ProofViolation : public std::logic_error {
public:
  explicit ProofViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fracpow
