#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qsa/channel.hpp"
#include "qsa/matrix.hpp"
#include "qsa/state.hpp"

namespace qsa {

// Seeded generators for sampling; all randomness in the library flows
// through an explicit engine so runs are reproducible.

inline PureState random_pure_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> a(dim);
  double n2 = 0.0;
  do {
    n2 = 0.0;
    for (cplx& v : a) {
      v = cplx(g(rng), g(rng));
      n2 += std::norm(v);
    }
  } while (n2 < 1e-12);
  const double inv = 1.0 / std::sqrt(n2);
  for (cplx& v : a) v *= inv;
  return PureState(std::move(a));
}

/// Ginibre construction: G G^dag normalized to unit trace.
inline DensityMatrix random_density_matrix(std::size_t dim,
                                           std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = cplx(g(rng), g(rng));
  ComplexMatrix rho = m * m.dagger();
  const double tr = rho.trace().real();
  return DensityMatrix(cplx(1.0 / tr, 0.0) * rho);
}

/// Columns of a Ginibre sample orthonormalized by modified Gram-Schmidt;
/// for cols == rows this is Haar-like enough for test sampling.
inline ComplexMatrix random_isometry_matrix(std::size_t rows, std::size_t cols,
                                            std::mt19937_64& rng) {
  if (cols > rows) throw dimension_error("random_isometry: cols > rows");
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < rows; ++i)
        proj += std::conj(m(i, k)) * m(i, j);
      for (std::size_t i = 0; i < rows; ++i) m(i, j) -= proj * m(i, k);
    }
    double n2 = 0.0;
    for (std::size_t i = 0; i < rows; ++i) n2 += std::norm(m(i, j));
    const double inv = 1.0 / std::sqrt(n2);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) *= inv;
  }
  return m;
}

inline ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64& rng) {
  return random_isometry_matrix(dim, dim, rng);
}

/// Random CPTP map via a random Stinespring isometry with n_ops
/// environment levels: K_i = (I (x) <i|) V.
inline KrausChannel random_channel(std::size_t in_dim, std::size_t out_dim,
                                   std::size_t n_ops, std::mt19937_64& rng) {
  if (n_ops < 1) throw parameter_error("random_channel: n_ops must be >= 1");
  if (in_dim > out_dim * n_ops) {
    throw dimension_error("random_channel: no isometry with these dims");
  }
  const ComplexMatrix v =
      random_isometry_matrix(out_dim * n_ops, in_dim, rng);
  std::vector<ComplexMatrix> ops;
  ops.reserve(n_ops);
  for (std::size_t e = 0; e < n_ops; ++e) {
    ComplexMatrix k(out_dim, in_dim);
    for (std::size_t b = 0; b < out_dim; ++b)
      for (std::size_t c = 0; c < in_dim; ++c) k(b, c) = v(b * n_ops + e, c);
    ops.push_back(std::move(k));
  }
  return KrausChannel(in_dim, out_dim, std::move(ops));
}

}  // namespace qsa
