#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "qsa/channel.hpp"
#include "qsa/common.hpp"
#include "qsa/matrix.hpp"
#include "qsa/state.hpp"

namespace qsa {

struct DepolarizingParams {
  std::size_t d;  // qudit dimension >= 2
  double p;       // mixing probability in [0, 1]
};

/// Coefficient data of the 1->N symmetric cloner.
struct ClonerParams {
  std::size_t n_clones;     // N
  std::size_t delta;        // N(N+1)/2
  std::vector<double> tau;  // tau_i = sqrt(2(N-i)/(N(N+1))), 0 <= i <= N-1
};

inline ClonerParams cloner_params(std::size_t n) {
  if (n < 1) throw parameter_error("cloner: N must be >= 1");
  ClonerParams cp;
  cp.n_clones = n;
  cp.delta = n * (n + 1) / 2;
  cp.tau.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cp.tau.push_back(std::sqrt(static_cast<double>(n - i) /
                               static_cast<double>(cp.delta)));
  }
  return cp;
}

namespace detail {

// Discrete Weyl (generalized Pauli) operators X^a Z^b on C^d.
inline ComplexMatrix weyl(std::size_t d, std::size_t a, std::size_t b) {
  ComplexMatrix w(d, d);
  const double w0 = 2.0 * std::numbers::pi / static_cast<double>(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double phase = w0 * static_cast<double>(b * j);
    w((j + a) % d, j) = cplx(std::cos(phase), std::sin(phase));
  }
  return w;
}

}  // namespace detail

/// rho -> (1-p) rho + p I/d. Kraus form: the identity component merged
/// into a single operator plus the d^2 - 1 nontrivial Weyl operators
/// scaled by sqrt(p)/d; the action equals the map formula exactly.
inline KrausChannel depolarizing(const DepolarizingParams& params) {
  if (params.d < 2) throw parameter_error("depolarizing: d must be >= 2");
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw parameter_error("depolarizing: p must lie in [0, 1]");
  }
  const std::size_t d = params.d;
  const double p = params.p;
  std::vector<ComplexMatrix> ops;
  ops.push_back(cplx(std::sqrt(1.0 - p + p / static_cast<double>(d * d)), 0.0) *
                ComplexMatrix::identity(d));
  if (p > 0.0) {
    const double scale = std::sqrt(p) / static_cast<double>(d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        if (a == 0 && b == 0) continue;
        ops.push_back(cplx(scale, 0.0) * detail::weyl(d, a, b));
      }
  }
  return KrausChannel(d, d, std::move(ops));
}

/// The 1->N symmetric cloner with both of its representations. The channel
/// maps a qubit into the (N+1)-dimensional symmetric subspace; the
/// dilation orders the output as (symmetric output) (x) (environment F).
struct Cloner {
  KrausChannel channel;
  Isometry isometry;
  ClonerParams params;
};

inline Cloner cloner(std::size_t n) {
  const ClonerParams cp = cloner_params(n);
  const double root_delta = std::sqrt(static_cast<double>(cp.delta));

  std::vector<ComplexMatrix> ops;
  ops.reserve(n);
  ComplexMatrix v((n + 1) * n, 2);
  for (std::size_t k = 0; k < n; ++k) {
    ComplexMatrix op(n + 1, 2);
    op(k, 0) = std::sqrt(static_cast<double>(n - k)) / root_delta;
    op(k + 1, 1) = std::sqrt(static_cast<double>(k + 1)) / root_delta;
    v(k * n + k, 0) = op(k, 0);
    v((k + 1) * n + k, 1) = op(k + 1, 1);
    ops.push_back(std::move(op));
  }
  return Cloner{KrausChannel(2, n + 1, std::move(ops)),
                Isometry(2, n + 1, n, std::move(v)), cp};
}

/// Kraus family of the map to the cloner's environment F (dimension N).
inline KrausChannel cloner_complementary(std::size_t n) {
  if (n < 1) throw parameter_error("cloner_complementary: N must be >= 1");
  const double root_delta =
      std::sqrt(static_cast<double>(n * (n + 1) / 2));
  std::vector<ComplexMatrix> ops;
  ops.reserve(n + 1);
  {
    ComplexMatrix a(n, 2);
    a(0, 0) = std::sqrt(static_cast<double>(n)) / root_delta;
    ops.push_back(std::move(a));
  }
  for (std::size_t k = 1; k < n; ++k) {
    ComplexMatrix a(n, 2);
    a(k, 0) = std::sqrt(static_cast<double>(n - k)) / root_delta;
    a(k - 1, 1) = std::sqrt(static_cast<double>(k)) / root_delta;
    ops.push_back(std::move(a));
  }
  {
    ComplexMatrix a(n, 2);
    a(n - 1, 1) = std::sqrt(static_cast<double>(n)) / root_delta;
    ops.push_back(std::move(a));
  }
  return KrausChannel(2, n, std::move(ops));
}

/// Maps the (N+1)-dimensional symmetric basis state |b> to the normalized
/// uniform superposition of all N-qubit strings with b ones.
inline Isometry symmetric_embedding(std::size_t n) {
  if (n < 1) throw parameter_error("symmetric_embedding: N must be >= 1");
  if (n > 6) {
    throw dimension_error("symmetric_embedding: 2^N exceeds the 64-dim cap");
  }
  const std::size_t full = std::size_t{1} << n;
  ComplexMatrix v(full, n + 1);
  std::vector<double> count(n + 1, 0.0);
  for (std::size_t x = 0; x < full; ++x) {
    count[static_cast<std::size_t>(std::popcount(x))] += 1.0;
  }
  for (std::size_t x = 0; x < full; ++x) {
    const std::size_t b = static_cast<std::size_t>(std::popcount(x));
    v(x, b) = 1.0 / std::sqrt(count[b]);
  }
  return Isometry(n + 1, full, 1, std::move(v));
}

/// Two-qubit purification sqrt(omega)|00> + sqrt(1-omega)|11>. The reduced
/// single-qubit state is diag(omega, 1-omega). The range is restricted to
/// [0, 1/2]; the mirrored half-range is the same physical resource.
inline PureState bell_purification(double omega) {
  if (!(omega >= 0.0 && omega <= 0.5)) {
    throw parameter_error("bell_purification: omega must lie in [0, 1/2]");
  }
  std::vector<cplx> a(4, cplx(0.0, 0.0));
  a[0] = std::sqrt(omega);
  a[3] = std::sqrt(1.0 - omega);
  return PureState(std::move(a));
}

/// Fidelity of each clone of the 1->N symmetric cloner: 2/3 + 1/(3N).
inline double clone_fidelity(std::size_t n) {
  if (n < 1) throw parameter_error("clone_fidelity: N must be >= 1");
  return 2.0 / 3.0 + 1.0 / (3.0 * static_cast<double>(n));
}

}  // namespace qsa
