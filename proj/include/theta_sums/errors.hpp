#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace theta_sums {

// Caller supplied something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotInvertible : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ModulusMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ZeroElement : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

// Raised by a solver or sweep whose size guard would be exceeded.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeTooLarge : public TooLarge {
 public:
  using TooLarge::TooLarge;
};

// An internal invariant did not hold. Always a bug, never a user error.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InexactDivision : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

class ParseError : public InvalidInput {
 public:
  enum class Kind { Syntax, Range, DuplicateExponent };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : InvalidInput(what), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  // Byte offset into the parsed text where the problem was detected.
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

}  // namespace theta_sums
