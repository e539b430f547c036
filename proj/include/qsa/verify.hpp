#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qsa/capacity.hpp"
#include "qsa/channel.hpp"
#include "qsa/common.hpp"
#include "qsa/joint.hpp"
#include "qsa/random.hpp"
#include "qsa/separability.hpp"
#include "qsa/zoo.hpp"

namespace qsa {

// Claim-by-claim verification of the closed-form reference values this
// toolkit implements. PASS/FAIL record whether the implementation meets a
// claim; DISCREPANCY marks the documented spots where the reference
// values are internally inconsistent and the computed value is reported
// instead. A run is healthy when nothing FAILs; discrepancies are
// expected findings, not errors.

enum class Verdict { pass, fail, discrepancy };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    default:
      return "DISCREPANCY";
  }
}

struct ClaimResult {
  std::string id;
  std::string detail;
  Verdict verdict;
};

inline bool suite_passed(const std::vector<ClaimResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const ClaimResult& r) {
    return r.verdict == Verdict::fail;
  });
}

namespace detail {

inline std::string fmt(double x, int digits = 9) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

inline Ensemble random_pure_ensemble(std::size_t dim, std::size_t n_states,
                                     std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  std::vector<double> w(n_states);
  double sum = 0.0;
  for (double& x : w) {
    x = u(rng);
    sum += x;
  }
  std::vector<Ensemble::Entry> entries;
  entries.reserve(n_states);
  for (std::size_t i = 0; i < n_states; ++i) {
    entries.emplace_back(w[i] / sum,
                         DensityMatrix::from_pure(random_pure_state(dim, rng)));
  }
  return Ensemble(std::move(entries));
}

inline DensityMatrix werner_state(double visibility) {
  const PureState bell = bell_purification(0.5);
  const ComplexMatrix m =
      cplx(visibility, 0.0) * bell.projector() +
      cplx((1.0 - visibility) / 4.0, 0.0) * ComplexMatrix::identity(4);
  return DensityMatrix(m);
}

}  // namespace detail

inline std::vector<ClaimResult> run_claim_suite(std::uint64_t seed = 42) {
  std::vector<ClaimResult> out;
  std::mt19937_64 rng(seed);

  const auto add = [&out](const std::string& id, Verdict v,
                          const std::string& detail) {
    out.push_back(ClaimResult{id, detail, v});
  };
  const auto run = [&](const std::string& id, auto&& fn) {
    try {
      fn(id);
    } catch (const std::exception& e) {
      add(id, Verdict::fail, std::string("exception: ") + e.what());
    }
  };
  using detail::fmt;

  run("depol-capacity-zero", [&](const std::string& id) {
    double worst = 0.0;
    for (std::size_t d = 2; d <= 8; ++d) {
      worst = std::max(worst,
                       std::abs(depolarizing_capacity({d, 1.0})));
    }
    add(id, worst <= 1e-12 ? Verdict::pass : Verdict::fail,
        "C(fully depolarizing, d=2..8) = 0; worst |C| = " + fmt(worst, 15));
  });

  run("depol-holevo-random-ensembles", [&](const std::string& id) {
    const KrausChannel ch = depolarizing({2, 1.0});
    std::uniform_int_distribution<std::size_t> k(2, 4);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Ensemble ens = detail::random_pure_ensemble(2, k(rng), rng);
      worst = std::max(worst, std::abs(holevo_chi(ch, ens).value));
    }
    add(id, worst <= structural_tol ? Verdict::pass : Verdict::fail,
        "holevo chi = 0 over 100 random pure-state ensembles; worst |chi| = " +
            fmt(worst, 12));
  });

  run("depol-min-output-entropy-arithmetic", [&](const std::string& id) {
    const double smin = min_output_entropy(depolarizing({2, 1.0}), 50, seed);
    const bool computed_ok = std::abs(smin - 1.0) <= structural_tol;
    add(id, computed_ok ? Verdict::discrepancy : Verdict::fail,
        "computed min output entropy " + fmt(smin) +
            " = log2(d), as zero capacity requires; the reference "
            "arithmetic for this quantity evaluates to 0");
  });

  run("joint-channel-zero-capacity", [&](const std::string& id) {
    const KrausChannel m =
        concatenate(cloner(2).channel, depolarizing({2, 1.0}));
    const DensityMatrix fixed = apply(cloner(2).channel,
                                      DensityMatrix::maximally_mixed(2));
    double worst_fix = 0.0;
    for (int i = 0; i < 20; ++i) {
      const DensityMatrix rho = random_density_matrix(2, rng);
      worst_fix = std::max(
          worst_fix, max_abs_diff(apply(m, rho).matrix(), fixed.matrix()));
    }
    double worst_chi = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Ensemble ens = detail::random_pure_ensemble(2, 3, rng);
      worst_chi = std::max(worst_chi, std::abs(holevo_chi(m, ens).value));
    }
    const bool ok = worst_fix <= structural_tol && worst_chi <= structural_tol;
    add(id, ok ? Verdict::pass : Verdict::fail,
        "cloner-after-depolarizing output is input-independent (worst drift " +
            fmt(worst_fix, 12) + "), chi = 0 (worst " + fmt(worst_chi, 12) +
            ")");
  });

  run("cloner-fidelity", [&](const std::string& id) {
    double worst = std::abs(clone_fidelity(2) - 5.0 / 6.0);
    for (std::size_t n = 1; n <= 4; ++n) {
      const Cloner c = cloner(n);
      const Isometry embed = symmetric_embedding(n);
      for (int t = 0; t < 5; ++t) {
        const PureState psi = random_pure_state(2, rng);
        const DensityMatrix sym = apply(c.channel, DensityMatrix::from_pure(psi));
        const ComplexMatrix embedded = embed.matrix() * sym.matrix() *
                                       embed.matrix().dagger();
        std::vector<std::size_t> dims(n, 2);
        DensityMatrix full{embedded};
        ComplexMatrix clone = full.matrix();
        std::vector<std::size_t> cur = dims;
        while (cur.size() > 1) {
          clone = partial_trace(clone, DimsSpec{std::vector<std::size_t>(cur)},
                                cur.size() - 1);
          cur.pop_back();
        }
        const std::vector<cplx>& a = psi.amplitudes();
        cplx f = 0.0;
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            f += std::conj(a[i]) * clone(i, j) * a[j];
        worst = std::max(worst, std::abs(f.real() - clone_fidelity(n)));
      }
    }
    add(id, worst <= 1e-12 ? Verdict::pass : Verdict::fail,
        "clone fidelity 2/3 + 1/(3N) matches simulation for N=1..4; worst "
        "deviation " + fmt(worst, 15) + "; N=2 value " +
            fmt(clone_fidelity(2), 6));
  });

  run("cloner-dilations-agree", [&](const std::string& id) {
    double worst = 0.0;
    for (std::size_t n = 1; n <= 4; ++n) {
      const Cloner c = cloner(n);
      for (int t = 0; t < 10; ++t) {
        const DensityMatrix rho = random_density_matrix(2, rng);
        worst = std::max(
            worst, max_abs_diff(apply(c.channel, rho).matrix(),
                                isometry_channel_output(c.isometry, rho)
                                    .matrix()));
      }
    }
    add(id, worst <= 1e-12 ? Verdict::pass : Verdict::fail,
        "Kraus family and isometric extension give identical outputs; worst "
        "difference " + fmt(worst, 15));
  });

  run("cloner-zero-noise-capacity", [&](const std::string& id) {
    double worst = std::abs(cloner_capacity_zero_noise(2) - 2.0 / 3.0);
    for (std::size_t n = 1; n <= 6; ++n) {
      worst = std::max(worst, std::abs(cloner_capacity_zero_noise(n) -
                                       cloner_mutual_info(n, 0.0).value));
    }
    add(id, worst <= 1e-12 ? Verdict::pass : Verdict::fail,
        "zero-noise capacity formula agrees with the mutual-information "
        "evaluation for N=1..6; N=2 value 2/3; worst deviation " +
            fmt(worst, 15));
  });

  run("cloner-capacity-maxmix-zero", [&](const std::string& id) {
    const double c = cloner_mutual_info(2, 0.5).value;
    add(id, std::abs(c) <= 1e-12 ? Verdict::pass : Verdict::fail,
        "capacity at omega = 1/2 is " + fmt(c, 15));
  });

  run("aux-input-entangled", [&](const std::string& id) {
    bool ok = true;
    for (int i = 1; i <= 50; ++i) {
      const double omega = 0.01 * static_cast<double>(i);
      const PptVerdict v =
          ppt_verdict(aux_input_state(AuxiliaryInput(omega)), DimsSpec{2, 2},
                      1);
      ok = ok && v.entangled;
    }
    add(id, ok ? Verdict::pass : Verdict::fail,
        "auxiliary input is entangled across (0, 1/2] (50-point grid)");
  });

  run("product-input-local-matrix-spectrum", [&](const std::string& id) {
    const auto formula = local_output_eigenvalues_formula(2);
    std::vector<double> want(formula.begin(), formula.end());
    std::sort(want.begin(), want.end());
    double worst = 0.0;
    for (double alpha : {0.3, 1.0 / std::sqrt(2.0), 0.9}) {
      const std::vector<double> got =
          hermitian_eigenvalues(product_input_local_matrix(2, alpha));
      for (std::size_t i = 0; i < 4; ++i)
        worst = std::max(worst, std::abs(got[i] - want[i]));
    }
    add(id, worst > 1e-6 ? Verdict::discrepancy : Verdict::pass,
        "spectrum of the printed product-input matrix disagrees with the "
        "reference eigenvalue set (max gap " + fmt(worst, 6) +
            "); the matrix annihilates |01>-|10>, forcing a zero eigenvalue "
            "the reference set lacks");
  });

  run("eigformula-negativity-iff-n2", [&](const std::string& id) {
    bool ok = true;
    for (std::size_t n = 2; n <= 8; ++n) {
      const auto e = local_output_eigenvalues_formula(n);
      const int negatives =
          static_cast<int>(std::count_if(e.begin(), e.end(), [](double x) {
            return x < -structural_tol;
          }));
      ok = ok && (negatives == (n == 2 ? 1 : 0));
    }
    add(id, ok ? Verdict::pass : Verdict::fail,
        "reference eigenvalue set has a negative entry iff N = 2 (checked "
        "N=2..8); N=2 value " +
            fmt(local_output_eigenvalues_formula(2)[3]));
  });

  run("remote-threshold-bisection", [&](const std::string& id) {
    const double closed = OmegaWindow::lower();
    const double found = entanglement_threshold(
        [](double w) { return remote_output_matrix(AuxiliaryInput(w)); }, 0.0,
        0.4);
    const double residual = std::abs(found - closed);
    add(id, residual <= 1e-6 ? Verdict::pass : Verdict::fail,
        "remote-output entanglement threshold: bisection " + fmt(found) +
            " vs closed form 1/2 - sqrt(39)/16 = " + fmt(closed) +
            " (residual " + fmt(residual, 12) + ")");
  });

  run("local-threshold-bisection", [&](const std::string& id) {
    const double closed = 0.5 - std::sqrt(48.0) / 16.0;
    const double found = entanglement_threshold(
        [](double w) {
          return local_output_matrix(AuxiliaryInput(w), true);
        },
        0.0, 0.4);
    const double residual = std::abs(found - closed);
    add(id, residual <= 1e-6 ? Verdict::pass : Verdict::fail,
        "local-output separability threshold: bisection " + fmt(found) +
            " vs closed form 1/2 - sqrt(48)/16 = " + fmt(closed) +
            " (residual " + fmt(residual, 12) + ")");
  });

  run("werner-anchor", [&](const std::string& id) {
    const double found = entanglement_threshold(
        [](double v) { return detail::werner_state(v); }, 0.0, 0.9);
    const double residual = std::abs(found - 1.0 / 3.0);
    add(id, residual <= 1e-6 ? Verdict::pass : Verdict::fail,
        "Werner-state crossover located at visibility " + fmt(found) +
            " (expected 1/3)");
  });

  run("broadcast-matches-output-matrices", [&](const std::string& id) {
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
      const AuxiliaryInput aux(0.05 * static_cast<double>(i));
      const BroadcastOutputs b = broadcast_simulation(aux);
      worst = std::max(worst, max_abs_diff(b.remote.matrix(),
                                           remote_output_matrix(aux).matrix()));
      worst = std::max(
          worst, max_abs_diff(b.local.matrix(),
                              local_output_matrix(aux, true).matrix()));
    }
    add(id, worst <= structural_tol ? Verdict::pass : Verdict::fail,
        "first-principles broadcast reductions equal the closed-form output "
        "matrices (worst entrywise gap " + fmt(worst, 12) + ")");
  });

  run("exclusivity-window", [&](const std::string& id) {
    bool ok = true;
    const double lo = OmegaWindow::lower();
    for (int i = 0; i < 100; ++i) {
      const double omega =
          lo + (0.5 - lo) * static_cast<double>(i) / 99.0;
      const SweepRecord r = quasi_capacity(AuxiliaryInput(omega), 2);
      ok = ok && r.remote_min_pt_eig <= structural_tol &&
           r.local_min_pt_eig >= -structural_tol;
    }
    add(id, ok ? Verdict::pass : Verdict::fail,
        "inside the admissible window the remote outputs are entangled (or "
        "boundary) while the local outputs stay separable (100-point grid)");
  });

  run("capacity-max-vs-reference", [&](const std::string& id) {
    const double computed =
        cloner_mutual_info(2, OmegaWindow::lower()).value;
    const double reference = 0.3354;
    const double delta = std::abs(computed - reference);
    const bool sane = std::abs(computed - 0.33400) <= 1e-4;
    add(id, sane ? Verdict::discrepancy : Verdict::fail,
        "capacity-curve maximum: computed " + fmt(computed) +
            " vs reference value " + fmt(reference, 4) + ": delta " +
            fmt(delta, 6));
  });

  run("gated-capacity-endpoints", [&](const std::string& id) {
    const SweepRecord at_half = quasi_capacity(AuxiliaryInput(0.5), 2);
    const SweepRecord at_edge =
        quasi_capacity(AuxiliaryInput(OmegaWindow::lower()), 2);
    const std::vector<SweepRecord> grid = sweep(0.0, 0.5, 101, 2);
    double grid_max = 0.0;
    bool strictly_decreasing = true;
    double prev = -1.0;
    bool have_prev = false;
    for (const SweepRecord& r : grid) {
      grid_max = std::max(grid_max, r.gated_capacity);
      if (OmegaWindow::contains(r.omega)) {
        if (have_prev && r.gated_capacity >= prev) strictly_decreasing = false;
        prev = r.gated_capacity;
        have_prev = true;
      }
    }
    const bool ok = at_half.gated_capacity == 0.0 &&
                    at_edge.gated_capacity == at_edge.raw_capacity &&
                    at_edge.gated_capacity >= grid_max - 1e-12 &&
                    strictly_decreasing;
    add(id, ok ? Verdict::pass : Verdict::fail,
        "gated capacity vanishes at omega = 1/2, equals the curve maximum " +
            fmt(at_edge.gated_capacity) +
            " at the window edge, and decreases strictly across the window");
  });

  run("cloner-spectrum-invariance", [&](const std::string& id) {
    const Cloner c = cloner(2);
    double worst = 0.0;
    const std::vector<ComplexMatrix> unitaries{pauli_x(), pauli_z(),
                                               hadamard()};
    for (const ComplexMatrix& u : unitaries) {
      for (int t = 0; t < 5; ++t) {
        const DensityMatrix rho = random_density_matrix(2, rng);
        const DensityMatrix rot(u * rho.matrix() * u.dagger());
        const std::vector<double> e1 =
            hermitian_eigenvalues(apply(c.channel, rho).matrix());
        const std::vector<double> e2 =
            hermitian_eigenvalues(apply(c.channel, rot).matrix());
        for (std::size_t i = 0; i < e1.size(); ++i)
          worst = std::max(worst, std::abs(e1[i] - e2[i]));
      }
    }
    add(id, worst <= structural_tol ? Verdict::pass : Verdict::fail,
        "cloner output spectrum is invariant under X, Z, Hadamard input "
        "rotations (worst gap " + fmt(worst, 12) + ")");
  });

  run("cloner-entanglement-breaking", [&](const std::string& id) {
    // the reference attributes entanglement breaking to every 1->N
    // cloner; the computed partial-transpose spectrum says otherwise
    const Cloner c = cloner(2);
    const Isometry embed = symmetric_embedding(2);
    const ComplexMatrix site = kron(embed.matrix(),
                                    ComplexMatrix::identity(2)) *
                               c.isometry.matrix();
    const ComplexMatrix lifted = kron(ComplexMatrix::identity(2), site);
    const std::vector<cplx> out =
        lifted * bell_purification(0.5).amplitudes();
    const DensityMatrix joint{outer(out, out)};
    const DensityMatrix rod = reduce_to(joint, DimsSpec{2, 4, 2}, {0, 1});
    const double min_pt =
        hermitian_eigenvalues(partial_transpose(rod, DimsSpec{2, 4}, 0))
            .front();
    add(id, min_pt < -structural_tol ? Verdict::discrepancy : Verdict::pass,
        "half of a Bell pair sent through the 1->2 cloner keeps a negative "
        "partial-transpose eigenvalue " + fmt(min_pt) +
            " (= -1/6) across the reference|clones cut; the "
            "entanglement-breaking attribution in the reference does not "
            "hold for this channel");
  });

  run("stinespring-consistency", [&](const std::string& id) {
    double worst = 0.0;
    std::vector<KrausChannel> zoo;
    zoo.push_back(depolarizing({2, 1.0}));
    zoo.push_back(depolarizing({3, 0.5}));
    for (std::size_t n = 1; n <= 3; ++n) {
      zoo.push_back(cloner(n).channel);
      zoo.push_back(cloner_complementary(n));
    }
    for (const KrausChannel& ch : zoo) {
      const Isometry v = isometry_from_kraus(ch);
      for (int t = 0; t < 10; ++t) {
        const DensityMatrix rho = random_density_matrix(ch.in_dim(), rng);
        worst = std::max(worst,
                         max_abs_diff(apply(ch, rho).matrix(),
                                      isometry_channel_output(v, rho).matrix()));
      }
    }
    add(id, worst <= structural_tol ? Verdict::pass : Verdict::fail,
        "Tr_E(V rho V^dag) reproduces every zoo channel (worst gap " +
            fmt(worst, 12) + ")");
  });

  return out;
}

}  // namespace qsa
