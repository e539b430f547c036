#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qsa/common.hpp"

namespace qsa {

using cplx = std::complex<double>;

// Largest row/column count a kron result may have before it is rejected.
inline constexpr std::size_t kron_dim_cap = 4096;

/// Dense complex matrix, row-major. Small Hilbert spaces only (dims <= 64
/// for states; operator products may be larger, capped by kron_dim_cap).
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {
    if (rows == 0 || cols == 0) {
      throw dimension_error("ComplexMatrix: rows and cols must be >= 1");
    }
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw dimension_error("ComplexMatrix: rows and cols must be >= 1");
    }
    if (entries_.size() != rows * cols) {
      throw dimension_error("ComplexMatrix: entry count != rows*cols");
    }
    ensure_finite("ComplexMatrix");
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) {
        throw dimension_error("from_rows: ragged row lengths");
      }
      std::size_t j = 0;
      for (const cplx& v : row) m(i, j++) = v;
      ++i;
    }
    m.ensure_finite("from_rows");
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<cplx>& entries() const { return entries_; }

  ComplexMatrix dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  ComplexMatrix transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  cplx trace() const {
    if (rows_ != cols_) throw dimension_error("trace: matrix not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const cplx& v : entries_) m = std::max(m, std::abs(v));
    return m;
  }

  bool is_finite() const {
    for (const cplx& v : entries_) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
  }

  void ensure_finite(const char* what) const {
    if (!is_finite()) {
      throw contract_violation(std::string(what) + ": non-finite entry");
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> entries_;
};

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw dimension_error("matrix add: shape mismatch");
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw dimension_error("matrix subtract: shape mismatch");
  }
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("matmul: shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

inline ComplexMatrix operator*(const cplx& s, const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  return out;
}

inline ComplexMatrix operator*(const ComplexMatrix& m, const cplx& s) {
  return s * m;
}

inline std::vector<cplx> operator*(const ComplexMatrix& m,
                                   const std::vector<cplx>& v) {
  if (m.cols() != v.size()) throw dimension_error("matvec: shape mismatch");
  std::vector<cplx> out(m.rows(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

/// |u><v| outer product.
inline ComplexMatrix outer(const std::vector<cplx>& u,
                           const std::vector<cplx>& v) {
  ComplexMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw dimension_error("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                         double tol) {
  return max_abs_diff(a, b) <= tol;
}

/// Kronecker product. Basis order is lexicographic with the left factor as
/// the most significant index (|00>, |01>, |10>, |11>).
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                          std::size_t dim_cap = kron_dim_cap) {
  a.ensure_finite("kron lhs");
  b.ensure_finite("kron rhs");
  if (a.rows() * b.rows() > dim_cap || a.cols() * b.cols() > dim_cap) {
    throw dimension_error("kron: result dimension exceeds cap");
  }
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

inline ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}

inline ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows(
      {{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}});
}

inline ComplexMatrix pauli_z() {
  return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

inline ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::from_rows({{s, s}, {s, -s}});
}

}  // namespace qsa
