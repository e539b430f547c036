#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qsa/common.hpp"
#include "qsa/eigen.hpp"
#include "qsa/matrix.hpp"

namespace qsa {

/// Normalized state vector over a small Hilbert space.
class PureState {
 public:
  explicit PureState(std::vector<cplx> amplitudes)
      : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
      throw dimension_error("PureState: empty amplitude vector");
    }
    double n2 = 0.0;
    for (const cplx& a : amplitudes_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw contract_violation("PureState: non-finite amplitude");
      }
      n2 += std::norm(a);
    }
    if (std::abs(n2 - 1.0) > structural_tol) {
      throw normalization_error("PureState: squared norm " +
                                std::to_string(n2) + " != 1");
    }
  }

  static PureState basis(std::size_t dim, std::size_t k) {
    if (k >= dim) throw dimension_error("PureState::basis: index out of range");
    std::vector<cplx> a(dim, cplx(0.0, 0.0));
    a[k] = 1.0;
    return PureState(std::move(a));
  }

  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }

  /// |psi><psi| as a raw matrix.
  ComplexMatrix projector() const { return outer(amplitudes_, amplitudes_); }

 private:
  std::vector<cplx> amplitudes_;
};

/// Density operator: Hermitian, unit trace, positive semidefinite
/// (all within structural_tol). Validated on construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols()) {
      throw dimension_error("DensityMatrix: matrix not square");
    }
    matrix_.ensure_finite("DensityMatrix");
    if (max_abs_diff(matrix_, matrix_.dagger()) > structural_tol) {
      throw contract_violation("DensityMatrix: not Hermitian within 1e-9");
    }
    const cplx tr = matrix_.trace();
    if (std::abs(tr - cplx(1.0, 0.0)) > structural_tol) {
      throw contract_violation("DensityMatrix: trace != 1 within 1e-9");
    }
    const std::vector<double> eig = hermitian_eigenvalues(matrix_);
    if (eig.front() < -structural_tol) {
      throw contract_violation("DensityMatrix: negative eigenvalue " +
                               std::to_string(eig.front()));
    }
  }

  static DensityMatrix from_pure(const PureState& psi) {
    return DensityMatrix(psi.projector());
  }

  static DensityMatrix maximally_mixed(std::size_t d) {
    return DensityMatrix(cplx(1.0 / static_cast<double>(d), 0.0) *
                         ComplexMatrix::identity(d));
  }

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Ordered subsystem dimensions of a tensor factorization.
class DimsSpec {
 public:
  DimsSpec(std::initializer_list<std::size_t> dims) : dims_(dims) { check(); }
  explicit DimsSpec(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    check();
  }

  std::size_t size() const { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_[i]; }
  const std::vector<std::size_t>& dims() const { return dims_; }

  std::size_t total() const {
    std::size_t t = 1;
    for (std::size_t d : dims_) t *= d;
    return t;
  }

  void require_total(std::size_t dim) const {
    if (total() != dim) {
      throw dimension_error("DimsSpec: product of dims " +
                            std::to_string(total()) +
                            " != matrix dim " + std::to_string(dim));
    }
  }

 private:
  void check() const {
    if (dims_.empty()) throw dimension_error("DimsSpec: empty");
    for (std::size_t d : dims_)
      if (d == 0) throw dimension_error("DimsSpec: zero-dim subsystem");
  }

  std::vector<std::size_t> dims_;
};

}  // namespace qsa
