#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqsym {

/// Malformed textual input; `position` is the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BasisMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class InconsistentSets : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotAColumn : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotDotStandard : public DomainError {
 public:
  using DomainError::DomainError;
};

class IncompatibleShape : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotQuasisymmetric : public DomainError {
 public:
  using DomainError::DomainError;
};

class FaithfulnessError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace sqsym
