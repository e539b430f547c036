#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here recomputes from first principles so it can check the library
// without reusing its code paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "qsa/qsa.hpp"

namespace test_helpers {

inline qsa::DensityMatrix bell_state() {
  return qsa::DensityMatrix::from_pure(qsa::bell_purification(0.5));
}

inline qsa::DensityMatrix werner(double visibility) {
  const qsa::ComplexMatrix m =
      qsa::cplx(visibility, 0.0) * qsa::bell_purification(0.5).projector() +
      qsa::cplx((1.0 - visibility) / 4.0, 0.0) *
          qsa::ComplexMatrix::identity(4);
  return qsa::DensityMatrix(m);
}

/// Fidelity of a single clone, computed by simulating the cloner output,
/// embedding the symmetric subspace into N qubits and reducing to the
/// first of them.
inline double simulated_clone_fidelity(std::size_t n,
                                       const qsa::PureState& psi) {
  const qsa::Cloner c = qsa::cloner(n);
  const qsa::Isometry embed = qsa::symmetric_embedding(n);
  const qsa::DensityMatrix sym =
      qsa::apply(c.channel, qsa::DensityMatrix::from_pure(psi));
  qsa::ComplexMatrix full =
      embed.matrix() * sym.matrix() * embed.matrix().dagger();
  std::vector<std::size_t> dims(n, 2);
  while (dims.size() > 1) {
    full = qsa::partial_trace(
        full, qsa::DimsSpec{std::vector<std::size_t>(dims)}, dims.size() - 1);
    dims.pop_back();
  }
  const std::vector<qsa::cplx>& a = psi.amplitudes();
  qsa::cplx f = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      f += std::conj(a[i]) * full(i, j) * a[j];
  return f.real();
}

inline double max_abs_gap(const std::vector<double>& a,
                          const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Compare two spectra as multisets (both ascending already).
inline bool multiset_close(std::vector<double> a, std::vector<double> b,
                           double tol) {
  if (a.size() != b.size()) return false;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return max_abs_gap(a, b) <= tol;
}

}  // namespace test_helpers
