#pragma once

#include <stdexcept>
#include <string>

namespace altperm {

// Input violates a documented precondition (wrong class, length, pattern, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A partition whose parts are not (weakly/strictly) decreasing.
class ShapeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An exhaustive enumeration was asked to go past its safety cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or JSON input.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace altperm
