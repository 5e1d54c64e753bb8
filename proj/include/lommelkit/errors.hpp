#pragma once

#include <stdexcept>
#include <string>

namespace lommelkit {

/// Argument outside the domain an operation is defined on (x < 0, bad order, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method (continued fraction, root refinement, quadrature,
/// continuation) failed to reach its tolerance. The message names the bracket.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result not representable in double precision.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace lommelkit
