#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace birkhoff {

/// Operands live in different polynomial rings (variable lists differ).
class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed polynomial text. `position` is a 0-based byte offset.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input violates a structural precondition (non-reduced curve, Hess F == 0,
/// singular dual point, ...). Maps to CLI exit code 2.
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numeric procedure did not converge or left its tolerance envelope.
/// Maps to CLI exit code 4.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace birkhoff
