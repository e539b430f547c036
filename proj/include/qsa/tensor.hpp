#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "qsa/common.hpp"
#include "qsa/matrix.hpp"
#include "qsa/state.hpp"

namespace qsa {

namespace detail {

// Decompose a composite basis index into per-subsystem indices
// (left-to-right, lexicographic).
inline std::vector<std::size_t> split_index(std::size_t idx,
                                            const DimsSpec& dims) {
  std::vector<std::size_t> parts(dims.size());
  for (std::size_t s = dims.size(); s-- > 0;) {
    parts[s] = idx % dims[s];
    idx /= dims[s];
  }
  return parts;
}

inline std::size_t join_index(const std::vector<std::size_t>& parts,
                              const DimsSpec& dims) {
  std::size_t idx = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) idx = idx * dims[s] + parts[s];
  return idx;
}

}  // namespace detail

/// Trace out one subsystem of a composite operator.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, const DimsSpec& dims,
                                   std::size_t traced) {
  if (m.rows() != m.cols()) {
    throw dimension_error("partial_trace: matrix not square");
  }
  dims.require_total(m.rows());
  if (traced >= dims.size()) {
    throw dimension_error("partial_trace: subsystem index out of range");
  }
  std::vector<std::size_t> kept;
  for (std::size_t s = 0; s < dims.size(); ++s)
    if (s != traced) kept.push_back(dims[s]);
  if (kept.empty()) kept.push_back(1);  // scalar trace as a 1x1 matrix
  const DimsSpec out_dims{std::vector<std::size_t>(kept)};

  ComplexMatrix out(out_dims.total(), out_dims.total());
  const std::size_t total = m.rows();
  for (std::size_t i = 0; i < total; ++i) {
    const auto pi = detail::split_index(i, dims);
    for (std::size_t j = 0; j < total; ++j) {
      const auto pj = detail::split_index(j, dims);
      if (pi[traced] != pj[traced]) continue;
      std::vector<std::size_t> ri, rj;
      ri.reserve(dims.size());
      rj.reserve(dims.size());
      for (std::size_t s = 0; s < dims.size(); ++s) {
        if (s == traced) continue;
        ri.push_back(pi[s]);
        rj.push_back(pj[s]);
      }
      if (ri.empty()) {
        ri.push_back(0);
        rj.push_back(0);
      }
      out(detail::join_index(ri, out_dims), detail::join_index(rj, out_dims)) +=
          m(i, j);
    }
  }
  return out;
}

/// Reduced state on the remaining subsystems; trace and Hermiticity are
/// preserved, so the result is again a valid density operator.
inline DensityMatrix partial_trace(const DensityMatrix& rho,
                                   const DimsSpec& dims, std::size_t traced) {
  return DensityMatrix(partial_trace(rho.matrix(), dims, traced));
}

/// Transpose one subsystem in place of a composite operator (block
/// transpose). Hermiticity is preserved; positivity generally is not.
inline ComplexMatrix partial_transpose(const ComplexMatrix& m,
                                       const DimsSpec& dims,
                                       std::size_t transposed) {
  if (m.rows() != m.cols()) {
    throw dimension_error("partial_transpose: matrix not square");
  }
  dims.require_total(m.rows());
  if (transposed >= dims.size()) {
    throw dimension_error("partial_transpose: subsystem index out of range");
  }
  const std::size_t total = m.rows();
  ComplexMatrix out(total, total);
  for (std::size_t i = 0; i < total; ++i) {
    auto pi = detail::split_index(i, dims);
    for (std::size_t j = 0; j < total; ++j) {
      auto pj = detail::split_index(j, dims);
      std::swap(pi[transposed], pj[transposed]);
      out(detail::join_index(pi, dims), detail::join_index(pj, dims)) = m(i, j);
      std::swap(pi[transposed], pj[transposed]);
    }
  }
  return out;
}

inline ComplexMatrix partial_transpose(const DensityMatrix& rho,
                                       const DimsSpec& dims,
                                       std::size_t transposed) {
  return partial_transpose(rho.matrix(), dims, transposed);
}

/// Reduce a composite state to the subsystems listed in `keep`
/// (ascending original indices; relative order is preserved).
inline DensityMatrix reduce_to(const DensityMatrix& rho, const DimsSpec& dims,
                               std::vector<std::size_t> keep) {
  dims.require_total(rho.dim());
  std::sort(keep.begin(), keep.end());
  if (keep.empty() || keep.back() >= dims.size()) {
    throw dimension_error("reduce_to: bad keep list");
  }
  ComplexMatrix m = rho.matrix();
  std::vector<std::size_t> cur = dims.dims();
  for (std::size_t s = dims.size(); s-- > 0;) {
    if (std::find(keep.begin(), keep.end(), s) != keep.end()) continue;
    m = partial_trace(m, DimsSpec{std::vector<std::size_t>(cur)}, s);
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(s));
  }
  return DensityMatrix(m);
}

}  // namespace qsa
