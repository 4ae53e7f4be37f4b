#pragma once

#include <stdexcept>
#include <string>

namespace s2adv {

/// Raised when an operation is evaluated outside its mathematical domain:
/// zero or negative-real quaternion logarithms, antipodal SLERP pairs,
/// degenerate interpolation stencils, empty error masks.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when two objects that must share a mesh (curves, flow maps) do not.
class MeshMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace s2adv
