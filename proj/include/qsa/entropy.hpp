#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "qsa/common.hpp"
#include "qsa/eigen.hpp"
#include "qsa/state.hpp"

namespace qsa {

namespace detail {

// -sum p log2 p with 0 log 0 := 0. Assumes entries already clamped.
inline double entropy_bits(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

}  // namespace detail

/// Shannon entropy in bits. Entries may dip to -1e-12 (clamped to zero);
/// the distribution must sum to one within structural_tol.
inline double shannon_entropy(const std::vector<double>& p) {
  std::vector<double> q;
  q.reserve(p.size());
  double sum = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < -1e-12) {
      throw normalization_error("shannon_entropy: negative probability " +
                                std::to_string(x));
    }
    const double c = x < 0.0 ? 0.0 : x;
    q.push_back(c);
    sum += c;
  }
  if (std::abs(sum - 1.0) > structural_tol) {
    throw normalization_error("shannon_entropy: probabilities sum to " +
                              std::to_string(sum));
  }
  return detail::entropy_bits(q);
}

/// Von Neumann entropy in bits: the Shannon entropy of the spectrum.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  std::vector<double> eig = hermitian_eigenvalues(rho.matrix());
  double sum = 0.0;
  for (double& x : eig) {
    if (x < -structural_tol) {
      throw contract_violation("von_neumann_entropy: negative eigenvalue " +
                               std::to_string(x));
    }
    if (x < 0.0) x = 0.0;
    sum += x;
  }
  // Spectrum sums to the trace (1 within tolerance); renormalize exactly
  // so downstream arithmetic is a clean distribution.
  for (double& x : eig) x /= sum;
  return detail::entropy_bits(eig);
}

}  // namespace qsa
