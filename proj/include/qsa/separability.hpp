#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "qsa/common.hpp"
#include "qsa/eigen.hpp"
#include "qsa/matrix.hpp"
#include "qsa/state.hpp"
#include "qsa/tensor.hpp"

namespace qsa {

/// Outcome of the partial-transpose test. For 2x2 systems a negative
/// eigenvalue is equivalent to entanglement; for larger bipartitions it is
/// only a witness (NPT implies entangled, PPT decides nothing).
struct PptVerdict {
  double min_pt_eigenvalue;
  bool entangled;  // min_pt_eigenvalue < -structural_tol
  std::vector<double> eigenvalues;  // full PT spectrum, ascending
};

inline PptVerdict ppt_verdict(const DensityMatrix& rho, const DimsSpec& dims,
                              std::size_t cut) {
  if (dims.size() != 2) {
    throw dimension_error("ppt_verdict: bipartite dims required");
  }
  if (cut >= 2) throw dimension_error("ppt_verdict: cut must be 0 or 1");
  std::vector<double> eig =
      hermitian_eigenvalues(partial_transpose(rho, dims, cut));
  const double min_eig = eig.front();
  return PptVerdict{min_eig, min_eig < -structural_tol, std::move(eig)};
}

namespace detail {

inline cplx det2(const ComplexMatrix& m, std::size_t r0, std::size_t r1,
                 std::size_t c0, std::size_t c1) {
  return m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
}

inline cplx det3_leading(const ComplexMatrix& m) {
  return m(0, 0) * det2(m, 1, 2, 1, 2) - m(0, 1) * det2(m, 1, 2, 0, 2) +
         m(0, 2) * det2(m, 1, 2, 0, 1);
}

inline cplx det4(const ComplexMatrix& m) {
  cplx d = 0.0;
  for (std::size_t c = 0; c < 4; ++c) {
    // 3x3 minor skipping row 0 and column c
    std::array<std::size_t, 3> cols{};
    std::size_t idx = 0;
    for (std::size_t k = 0; k < 4; ++k)
      if (k != c) cols[idx++] = k;
    const cplx minor =
        m(1, cols[0]) * det2(m, 2, 3, cols[1], cols[2]) -
        m(1, cols[1]) * det2(m, 2, 3, cols[0], cols[2]) +
        m(1, cols[2]) * det2(m, 2, 3, cols[0], cols[1]);
    const double sign = (c % 2 == 0) ? 1.0 : -1.0;
    d += cplx(sign, 0.0) * m(0, c) * minor;
  }
  return d;
}

}  // namespace detail

/// Determinant-based entanglement witness on a two-qubit state, computed
/// from the partial transpose with respect to the second qubit:
/// d1 = leading 3x3 minor, d2 = full determinant, d3 = (00,00) entry,
/// d4 = leading 2x2 principal minor. d1 < 0 or d2 < 0 witnesses
/// entanglement.
struct DeterminantReport {
  double d1;
  double d2;
  double d3;
  double d4;

  bool entangled_witness() const { return d1 < 0.0 || d2 < 0.0; }
};

inline DeterminantReport determinant_criterion(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw dimension_error("determinant_criterion: two-qubit state required");
  }
  const ComplexMatrix pt = partial_transpose(rho, DimsSpec{2, 2}, 1);
  return DeterminantReport{detail::det3_leading(pt).real(),
                           detail::det4(pt).real(), pt(0, 0).real(),
                           detail::det2(pt, 0, 1, 0, 1).real()};
}

/// Closed-form spectrum claimed for the local two-clone output with pure
/// product input: {1/6, 1/6, 1/3 +- sqrt(2(5 + 4(N-1) + (N-1)^2))/(6N)}.
/// The last entry is negative iff N = 2.
inline std::array<double, 4> local_output_eigenvalues_formula(std::size_t n) {
  if (n < 2) {
    throw parameter_error("local_output_eigenvalues_formula: N must be >= 2");
  }
  const double m = static_cast<double>(n - 1);
  const double root =
      std::sqrt(2.0 * (5.0 + 4.0 * m + m * m)) / (6.0 * static_cast<double>(n));
  return {1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0 + root, 1.0 / 3.0 - root};
}

/// The local two-clone output matrix for the pure product input
/// (alpha|0> + beta|1>) on both auxiliary ports, as printed in the source
/// the eigenvalue formula above was taken from. Returned raw: its spectrum
/// is compared against the formula by the verification report (the two do
/// not agree; the matrix annihilates |01> - |10>).
inline ComplexMatrix product_input_local_matrix(std::size_t n, double alpha) {
  if (n < 2) {
    throw parameter_error("product_input_local_matrix: N must be >= 2");
  }
  if (!(alpha >= -1.0 && alpha <= 1.0)) {
    throw parameter_error("product_input_local_matrix: |alpha| <= 1");
  }
  const double m = static_cast<double>(n - 1);
  const double a2 = alpha * alpha;
  const double b2 = 1.0 - a2;
  const double ab = alpha * std::sqrt(b2);
  const double corner00 = ((3.0 * m + 5.0) * b2 + (m - 1.0) * a2) / (m + 1.0);
  const double corner11 = ((3.0 * m + 5.0) * a2 + (m - 1.0) * b2) / (m + 1.0);
  const double coh = ab * (m + 3.0) / (m + 1.0);
  ComplexMatrix out = ComplexMatrix::from_rows({{corner00, coh, coh, 0.0},
                                                {coh, 1.0, 1.0, coh},
                                                {coh, 1.0, 1.0, coh},
                                                {0.0, coh, coh, corner11}});
  return cplx(1.0 / 6.0, 0.0) * out;
}

/// Bisection root of the minimum partial-transpose eigenvalue of a
/// one-parameter two-qubit family. Requires a sign change over [lo, hi]
/// and assumes a single crossing; absolute tolerance 1e-9, at most 60
/// bisection steps.
inline double entanglement_threshold(
    const std::function<DensityMatrix(double)>& family, double lo, double hi) {
  if (!(lo < hi)) throw parameter_error("entanglement_threshold: lo < hi");
  const auto min_pt = [&family](double x) {
    return ppt_verdict(family(x), DimsSpec{2, 2}, 1).min_pt_eigenvalue;
  };
  double flo = min_pt(lo);
  double fhi = min_pt(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw no_crossing_error(
        "entanglement_threshold: same sign at both endpoints");
  }
  constexpr double tol = 1e-9;
  for (int iter = 0; iter < 60 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = min_pt(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qsa
