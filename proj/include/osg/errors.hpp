#pragma once

#include <stdexcept>
#include <string>

namespace osg {

// Caller broke a documented precondition (empty ideal candidate, mismatched
// parent structures, subset not product-closed, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A size guard (ideal enumeration cap, powerset cap, enumeration order, ...)
// refused the request.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed .osg text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An internal cross-check between independently computed predicates
// disagreed.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace osg
