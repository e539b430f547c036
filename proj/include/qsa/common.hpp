#pragma once

#include <stdexcept>
#include <string>

namespace qsa {

// Tolerance used for structural invariants (Hermiticity, unit trace,
// completeness of Kraus families, isometry checks, PPT verdicts).
inline constexpr double structural_tol = 1e-9;

// Tolerance internal to iterative solvers (Jacobi off-diagonal norm).
inline constexpr double solver_tol = 1e-13;

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible or out-of-range matrix/subsystem dimensions.
class dimension_error : public error {
 public:
  using error::error;
};

/// Invalid scalar parameter (probability, noise parameter, clone count, ...).
class parameter_error : public error {
 public:
  using error::error;
};

/// Input violates a documented type invariant or operation precondition.
class contract_violation : public error {
 public:
  using error::error;
};

/// Probability data fails to sum to one within tolerance.
class normalization_error : public error {
 public:
  using error::error;
};

/// Root bracketing failed: no sign change over the search interval.
class no_crossing_error : public error {
 public:
  using error::error;
};

/// File or stream could not be written/read.
class io_error : public error {
 public:
  using error::error;
};

}  // namespace qsa
