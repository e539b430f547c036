#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qsa/common.hpp"
#include "qsa/matrix.hpp"
#include "qsa/state.hpp"
#include "qsa/tensor.hpp"

namespace qsa {

struct CptpReport {
  bool is_valid;
  double completeness_residual;          // max-norm of sum K^dag K - I
  std::vector<double> per_operator_norms;  // Frobenius norm of each operator
};

/// A CPTP map as a family of Kraus operators (each out_dim x in_dim).
/// The checked constructor enforces completeness; `unchecked` builds an
/// arbitrary operator family for inspection with validate_cptp.
class KrausChannel {
 public:
  KrausChannel(std::size_t in_dim, std::size_t out_dim,
               std::vector<ComplexMatrix> operators)
      : KrausChannel(in_dim, out_dim, std::move(operators), true) {}

  static KrausChannel unchecked(std::size_t in_dim, std::size_t out_dim,
                                std::vector<ComplexMatrix> operators) {
    return KrausChannel(in_dim, out_dim, std::move(operators), false);
  }

  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }

 private:
  KrausChannel(std::size_t in_dim, std::size_t out_dim,
               std::vector<ComplexMatrix> operators, bool enforce_completeness)
      : in_dim_(in_dim), out_dim_(out_dim), operators_(std::move(operators)) {
    if (operators_.empty()) {
      throw contract_violation("KrausChannel: needs at least one operator");
    }
    for (const ComplexMatrix& k : operators_) {
      if (k.rows() != out_dim_ || k.cols() != in_dim_) {
        throw dimension_error("KrausChannel: operator shape mismatch");
      }
      k.ensure_finite("KrausChannel operator");
    }
    if (enforce_completeness) {
      ComplexMatrix s(in_dim_, in_dim_);
      for (const ComplexMatrix& k : operators_) s = s + k.dagger() * k;
      const double residual =
          max_abs_diff(s, ComplexMatrix::identity(in_dim_));
      if (residual > structural_tol) {
        throw contract_violation(
            "KrausChannel: completeness residual " + std::to_string(residual));
      }
    }
  }

  std::size_t in_dim_;
  std::size_t out_dim_;
  std::vector<ComplexMatrix> operators_;
};

/// Stinespring dilation: a single isometry into output (x) environment.
class Isometry {
 public:
  Isometry(std::size_t in_dim, std::size_t out_dim_b, std::size_t out_dim_e,
           ComplexMatrix matrix)
      : in_dim_(in_dim),
        out_dim_b_(out_dim_b),
        out_dim_e_(out_dim_e),
        matrix_(std::move(matrix)) {
    if (matrix_.rows() != out_dim_b_ * out_dim_e_ ||
        matrix_.cols() != in_dim_) {
      throw dimension_error("Isometry: matrix shape mismatch");
    }
    matrix_.ensure_finite("Isometry");
    const double residual = max_abs_diff(matrix_.dagger() * matrix_,
                                         ComplexMatrix::identity(in_dim_));
    if (residual > structural_tol) {
      throw contract_violation("Isometry: V^dag V residual " +
                               std::to_string(residual));
    }
  }

  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim_b() const { return out_dim_b_; }
  std::size_t out_dim_e() const { return out_dim_e_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  std::size_t in_dim_;
  std::size_t out_dim_b_;
  std::size_t out_dim_e_;
  ComplexMatrix matrix_;
};

/// Completeness report for an arbitrary Kraus family.
inline CptpReport validate_cptp(const KrausChannel& ch) {
  ComplexMatrix s(ch.in_dim(), ch.in_dim());
  std::vector<double> norms;
  norms.reserve(ch.operators().size());
  for (const ComplexMatrix& k : ch.operators()) {
    s = s + k.dagger() * k;
    double f = 0.0;
    for (const cplx& v : k.entries()) f += std::norm(v);
    norms.push_back(std::sqrt(f));
  }
  const double residual = max_abs_diff(s, ComplexMatrix::identity(ch.in_dim()));
  return CptpReport{residual <= structural_tol, residual, std::move(norms)};
}

/// rho -> sum_i K_i rho K_i^dag.
inline DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.dim() != ch.in_dim()) {
    throw dimension_error("apply: input dim mismatch");
  }
  ComplexMatrix out(ch.out_dim(), ch.out_dim());
  for (const ComplexMatrix& k : ch.operators()) {
    out = out + k * rho.matrix() * k.dagger();
  }
  return DensityMatrix(out);
}

/// Kraus family of second ∘ first: all products K2_i K1_j. Operator count
/// is not minimized.
inline KrausChannel concatenate(const KrausChannel& second,
                                const KrausChannel& first) {
  if (first.out_dim() != second.in_dim()) {
    throw dimension_error("concatenate: inner dims mismatch");
  }
  std::vector<ComplexMatrix> ops;
  ops.reserve(first.operators().size() * second.operators().size());
  for (const ComplexMatrix& k2 : second.operators())
    for (const ComplexMatrix& k1 : first.operators()) ops.push_back(k2 * k1);
  return KrausChannel(first.in_dim(), second.out_dim(), std::move(ops));
}

/// Kraus family of a (x) b: all A_i (x) B_j.
inline KrausChannel tensor(const KrausChannel& a, const KrausChannel& b) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(a.operators().size() * b.operators().size());
  for (const ComplexMatrix& ka : a.operators())
    for (const ComplexMatrix& kb : b.operators()) ops.push_back(kron(ka, kb));
  return KrausChannel(a.in_dim() * b.in_dim(), a.out_dim() * b.out_dim(),
                      std::move(ops));
}

/// V = sum_i K_i (x) |i>_E, with the environment basis indexing the
/// operators in list order. Any dilation is valid up to an environment
/// unitary, so equivalence checks should compare channel outputs.
inline Isometry isometry_from_kraus(const KrausChannel& ch) {
  const std::size_t n_ops = ch.operators().size();
  ComplexMatrix v(ch.out_dim() * n_ops, ch.in_dim());
  for (std::size_t i = 0; i < n_ops; ++i) {
    const ComplexMatrix& k = ch.operators()[i];
    for (std::size_t b = 0; b < ch.out_dim(); ++b)
      for (std::size_t c = 0; c < ch.in_dim(); ++c)
        v(b * n_ops + i, c) = k(b, c);
  }
  return Isometry(ch.in_dim(), ch.out_dim(), n_ops, std::move(v));
}

namespace detail {

inline ComplexMatrix dilated_output(const Isometry& v,
                                    const DensityMatrix& rho) {
  if (rho.dim() != v.in_dim()) {
    throw dimension_error("isometry output: input dim mismatch");
  }
  return v.matrix() * rho.matrix() * v.matrix().dagger();
}

}  // namespace detail

/// Channel output through the dilation: Tr_E(V rho V^dag).
inline DensityMatrix isometry_channel_output(const Isometry& v,
                                             const DensityMatrix& rho) {
  return DensityMatrix(partial_trace(detail::dilated_output(v, rho),
                                     DimsSpec{v.out_dim_b(), v.out_dim_e()},
                                     1));
}

/// Environment output of the dilation: Tr_B(V rho V^dag).
inline DensityMatrix complementary_output(const Isometry& v,
                                          const DensityMatrix& rho) {
  return DensityMatrix(partial_trace(detail::dilated_output(v, rho),
                                     DimsSpec{v.out_dim_b(), v.out_dim_e()},
                                     0));
}

}  // namespace qsa
