#pragma once

#include <stdexcept>
#include <string>

namespace mqlandau {

/// Parameters outside the bound-state regime, or arguments outside a
/// function's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method hit its iteration cap without meeting its stopping rule.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite-difference step incompatible with the evaluation point.
class StepSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mqlandau
