#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qsa/common.hpp"
#include "qsa/matrix.hpp"

namespace qsa {

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns, same order as values
};

namespace detail {

inline double offdiagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = 0; q < a.cols(); ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p,q). The rotation
// G(p,p)=c, G(p,q)=-s*phase, G(q,p)=s*conj(phase), G(q,q)=c is applied
// as A <- G^dag A G and accumulated into V <- V G.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p,
                          std::size_t q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r < 1e-300) {
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    return;
  }
  const cplx phase = apq / r;
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
  const double t = (tau >= 0.0)
                       ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                       : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  // A <- A G (columns p and q)
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = c * akp + s * std::conj(phase) * akq;
    a(k, q) = -s * phase * akp + c * akq;
  }
  // A <- G^dag A (rows p and q)
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = c * apk + s * phase * aqk;
    a(q, k) = -s * std::conj(phase) * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = cplx(a(p, p).real(), 0.0);
  a(q, q) = cplx(a(q, q).real(), 0.0);
  // V <- V G
  for (std::size_t k = 0; k < v.rows(); ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = c * vkp + s * std::conj(phase) * vkq;
    v(k, q) = -s * phase * vkp + c * vkq;
  }
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// The input is symmetrized before solving; inputs farther than
/// structural_tol from Hermitian are rejected. Deterministic, adequate
/// for the small dense matrices used here (dim <= 64).
inline EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw dimension_error("hermitian_eigensystem: matrix not square");
  }
  m.ensure_finite("hermitian_eigensystem");
  if (max_abs_diff(m, m.dagger()) > structural_tol) {
    throw contract_violation("hermitian_eigensystem: input not Hermitian");
  }
  const std::size_t n = m.rows();
  ComplexMatrix a = cplx(0.5, 0.0) * (m + m.dagger());
  ComplexMatrix v = ComplexMatrix::identity(n);

  constexpr int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (detail::offdiagonal_norm(a) <= solver_tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenSystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

/// Eigenvalues only, ascending.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigensystem(m).values;
}

}  // namespace qsa
