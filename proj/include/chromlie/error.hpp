#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chromlie {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text; the message names the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A precondition of an operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A brute-force enumeration would exceed its step budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An exact computation that must produce an integer did not.
/// Always an implementation bug, never rounded away.
class IntegralityError : public Error {
 public:
  using Error::Error;
};

/// Independent routes to the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Step budget for exhaustive enumerations.
struct Budget {
  std::uint64_t max_steps = 10'000'000;

  void require(std::uint64_t steps, const char* what) const {
    if (steps > max_steps)
      throw BudgetExceeded(std::string(what) + ": needs " + std::to_string(steps) +
                           " steps, budget " + std::to_string(max_steps));
  }
};

}  // namespace chromlie
