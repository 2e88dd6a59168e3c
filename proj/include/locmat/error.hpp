#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locmat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is a 0-based offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition of a mathematical operation does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotNatural : public DomainError {
 public:
  using DomainError::DomainError;
};

class ChainNotDivisible : public DomainError {
 public:
  using DomainError::DomainError;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

class LevelMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class TruncationTooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnmappedIndex : public DomainError {
 public:
  using DomainError::DomainError;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace locmat
