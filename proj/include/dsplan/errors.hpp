#pragma once

#include <stdexcept>
#include <string>

namespace dsplan {

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Configuration or plan that violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an alternating-sum evaluation would exceed the sample-size cap
// inside which double precision results are trusted.
class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dsplan
