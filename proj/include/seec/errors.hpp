#pragma once

#include <stdexcept>
#include <string>

namespace seec {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Polynomial or quadrature order outside the supported range.
class UnsupportedOrder : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Quadratic form is not positive definite, so the normal modes are unbound.
class UnboundModeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Rotation angle outside the +-45 degree regime the (x+, x-) wavefunctions assume.
class UnsupportedRegime : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An integrand produced a non-finite value at a quadrature node.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double node)
      : std::runtime_error(what + " (node " + std::to_string(node) + ")"),
        node_(node) {}

  double node() const noexcept { return node_; }

 private:
  double node_;
};

}  // namespace seec
