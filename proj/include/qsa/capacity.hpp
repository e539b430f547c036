#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qsa/channel.hpp"
#include "qsa/common.hpp"
#include "qsa/entropy.hpp"
#include "qsa/random.hpp"
#include "qsa/state.hpp"
#include "qsa/zoo.hpp"

namespace qsa {

/// Probability-weighted family of equal-dimension states.
class Ensemble {
 public:
  using Entry = std::pair<double, DensityMatrix>;

  explicit Ensemble(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw parameter_error("Ensemble: empty");
    double sum = 0.0;
    for (const Entry& e : entries_) {
      if (!(e.first >= 0.0)) {
        throw normalization_error("Ensemble: negative probability");
      }
      if (e.second.dim() != entries_.front().second.dim()) {
        throw dimension_error("Ensemble: mixed state dimensions");
      }
      sum += e.first;
    }
    if (std::abs(sum - 1.0) > structural_tol) {
      throw normalization_error("Ensemble: probabilities sum to " +
                                std::to_string(sum));
    }
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t state_dim() const { return entries_.front().second.dim(); }

 private:
  std::vector<Entry> entries_;
};

struct CapacityResult {
  double value;                // output_entropy - conditional_entropy, bits
  double output_entropy;       // S of the average channel output
  double conditional_entropy;  // probability-weighted output entropies
};

namespace detail {

inline double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace detail

/// Holevo quantity of one fixed ensemble through a channel:
/// chi = S(N(sum p_i rho_i)) - sum p_i S(N(rho_i)).
/// Maximization over ensembles is the caller's loop.
inline CapacityResult holevo_chi(const KrausChannel& ch, const Ensemble& ens) {
  if (ens.state_dim() != ch.in_dim()) {
    throw dimension_error("holevo_chi: ensemble/channel dim mismatch");
  }
  ComplexMatrix avg(ch.in_dim(), ch.in_dim());
  double conditional = 0.0;
  for (const auto& [p, rho] : ens.entries()) {
    avg = avg + cplx(p, 0.0) * rho.matrix();
    if (p > 0.0) conditional += p * von_neumann_entropy(apply(ch, rho));
  }
  const double output = von_neumann_entropy(apply(ch, DensityMatrix(avg)));
  return CapacityResult{output - conditional, output, conditional};
}

/// Closed-form classical capacity of the depolarizing qudit channel:
/// log2 d + (1-p+p/d) log2(1-p+p/d) + (d-1)(p/d) log2(p/d).
inline double depolarizing_capacity(const DepolarizingParams& params) {
  if (params.d < 2) throw parameter_error("depolarizing_capacity: d >= 2");
  if (!(params.p >= 0.0 && params.p <= 1.0)) {
    throw parameter_error("depolarizing_capacity: p in [0, 1]");
  }
  const double d = static_cast<double>(params.d);
  const double p = params.p;
  return std::log2(d) + detail::xlog2(1.0 - p + p / d) +
         (d - 1.0) * detail::xlog2(p / d);
}

/// Sampled upper bound on the minimum output entropy: the minimum over
/// `trials` Haar-random pure inputs plus the computational and conjugate
/// (Fourier) basis states. Exact at this scale for covariant channels.
inline double min_output_entropy(const KrausChannel& ch, std::size_t trials,
                                 std::uint64_t seed = 42) {
  if (trials < 1) throw parameter_error("min_output_entropy: trials >= 1");
  const std::size_t d = ch.in_dim();
  std::vector<PureState> probes;
  probes.reserve(2 * d + trials);
  for (std::size_t k = 0; k < d; ++k) probes.push_back(PureState::basis(d, k));
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<cplx> a(d);
    const double w0 = 2.0 * std::numbers::pi / static_cast<double>(d);
    for (std::size_t j = 0; j < d; ++j) {
      const double phase = w0 * static_cast<double>(k * j);
      a[j] = cplx(std::cos(phase), std::sin(phase)) / std::sqrt(double(d));
    }
    probes.push_back(PureState(std::move(a)));
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    probes.push_back(random_pure_state(d, rng));
  }
  double best = std::numeric_limits<double>::infinity();
  for (const PureState& psi : probes) {
    best = std::min(best,
                    von_neumann_entropy(apply(ch, DensityMatrix::from_pure(psi))));
  }
  return best;
}

/// lambda_i(omega) = (N - 2i) omega + i for 0 <= i <= N. The scaled list
/// lambda_i / Delta_N is a probability distribution (sum is Delta_N).
inline std::vector<double> lambda_coeffs(std::size_t n, double omega) {
  if (n < 1) throw parameter_error("lambda_coeffs: N must be >= 1");
  if (!(omega >= 0.0 && omega <= 0.5)) {
    throw parameter_error("lambda_coeffs: omega must lie in [0, 1/2]");
  }
  std::vector<double> lam(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    lam[i] = (static_cast<double>(n) - 2.0 * static_cast<double>(i)) * omega +
             static_cast<double>(i);
  }
  return lam;
}

/// Mutual information between the classical register and the cloner
/// output for a purified input with noise parameter omega:
/// log2(N+1) - H(lambda_i(omega)/Delta_N).
inline CapacityResult cloner_mutual_info(std::size_t n, double omega) {
  const std::vector<double> lam = lambda_coeffs(n, omega);
  const double delta = static_cast<double>(n * (n + 1) / 2);
  std::vector<double> dist(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) dist[i] = lam[i] / delta;
  const double output = std::log2(static_cast<double>(n + 1));
  const double conditional = shannon_entropy(dist);
  return CapacityResult{output - conditional, output, conditional};
}

/// Zero-noise cloner capacity: 1 - log2 N + (1/Delta_N) sum i log2 i.
inline double cloner_capacity_zero_noise(std::size_t n) {
  if (n < 1) throw parameter_error("cloner_capacity_zero_noise: N >= 1");
  const double delta = static_cast<double>(n * (n + 1) / 2);
  double sum = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    sum += static_cast<double>(i) * std::log2(static_cast<double>(i));
  }
  return 1.0 - std::log2(static_cast<double>(n)) + sum / delta;
}

}  // namespace qsa
