#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "qsa/qsa.hpp"

using namespace qsa;

namespace {

DensityMatrix random_separable_two_qubit(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  const int k = terms(rng);
  std::vector<double> w(k);
  double sum = 0.0;
  for (double& x : w) {
    x = u(rng);
    sum += x;
  }
  ComplexMatrix m(4, 4);
  for (int i = 0; i < k; ++i) {
    const DensityMatrix a =
        DensityMatrix::from_pure(random_pure_state(2, rng));
    const DensityMatrix b =
        DensityMatrix::from_pure(random_pure_state(2, rng));
    m = m + cplx(w[i] / sum, 0.0) * kron(a.matrix(), b.matrix());
  }
  return DensityMatrix(m);
}

}  // namespace

TEST_CASE("ppt verdict on reference states") {
  const PptVerdict bell =
      ppt_verdict(test_helpers::bell_state(), DimsSpec{2, 2}, 1);
  CHECK(bell.entangled);
  CHECK(std::abs(bell.min_pt_eigenvalue + 0.5) < 1e-12);

  std::mt19937_64 rng(211);
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix a = random_density_matrix(2, rng);
    const DensityMatrix b = random_density_matrix(2, rng);
    const PptVerdict v = ppt_verdict(
        DensityMatrix(kron(a.matrix(), b.matrix())), DimsSpec{2, 2}, 1);
    CHECK_FALSE(v.entangled);
    CHECK(v.min_pt_eigenvalue > -structural_tol);
  }

  for (int i = 1; i <= 25; ++i) {
    const double omega = 0.02 * double(i);
    const PptVerdict v = ppt_verdict(aux_input_state(AuxiliaryInput(omega)),
                                     DimsSpec{2, 2}, 1);
    CHECK(v.entangled);
  }

  CHECK_THROWS_AS(ppt_verdict(test_helpers::bell_state(), DimsSpec{4}, 0),
                  dimension_error);
  CHECK_THROWS_AS(ppt_verdict(test_helpers::bell_state(), DimsSpec{2, 2}, 2),
                  dimension_error);
}

TEST_CASE("random separable mixtures pass the PPT test") {
  std::mt19937_64 rng(223);
  for (int t = 0; t < 500; ++t) {
    const PptVerdict v =
        ppt_verdict(random_separable_two_qubit(rng), DimsSpec{2, 2}, 1);
    CHECK_FALSE(v.entangled);
  }
}

TEST_CASE("determinant criterion") {
  const DeterminantReport mixed =
      determinant_criterion(DensityMatrix::maximally_mixed(4));
  CHECK(mixed.d1 > 0.0);
  CHECK(mixed.d2 > 0.0);
  CHECK(mixed.d3 > 0.0);
  CHECK(mixed.d4 > 0.0);
  CHECK_FALSE(mixed.entangled_witness());

  const DeterminantReport aux =
      determinant_criterion(aux_input_state(AuxiliaryInput(0.25)));
  CHECK((aux.d1 < 0.0 || aux.d2 < 0.0));
  CHECK(aux.d3 >= 0.0);

  // det of the Bell partial transpose is the product of its eigenvalues
  const DeterminantReport bell =
      determinant_criterion(test_helpers::bell_state());
  CHECK(std::abs(bell.d2 - (-1.0 / 16.0)) < 1e-12);
  CHECK(bell.entangled_witness());

  CHECK_THROWS_AS(determinant_criterion(DensityMatrix::maximally_mixed(3)),
                  dimension_error);
}

TEST_CASE("determinant witness agrees with the PPT verdict") {
  std::mt19937_64 rng(227);
  // boundary states (rank-deficient partial transposes, common for sparse
  // separable mixtures) are skipped via the |min_pt| > 1e-9 band
  int checked = 0;
  const auto agree = [&checked](const DensityMatrix& rho) {
    const PptVerdict v = ppt_verdict(rho, DimsSpec{2, 2}, 1);
    if (std::abs(v.min_pt_eigenvalue) <= structural_tol) return;
    const DeterminantReport d = determinant_criterion(rho);
    CHECK((d.d1 < 0.0 || d.d2 < 0.0) == (v.min_pt_eigenvalue < 0.0));
    ++checked;
  };
  for (int t = 0; t < 500; ++t) {
    agree(t % 2 == 0 ? random_density_matrix(4, rng)
                     : random_separable_two_qubit(rng));
  }
  CHECK(checked > 300);

  // the omega-parametrized families of the joint construction
  for (int i = 1; i <= 25; ++i) {
    const AuxiliaryInput aux(0.02 * double(i));
    agree(aux_input_state(aux));
    agree(remote_output_matrix(aux));
    agree(local_output_matrix(aux, true));
    agree(local_output_matrix(aux, false));
  }
}

TEST_CASE("local output eigenvalue formula") {
  const auto e2 = local_output_eigenvalues_formula(2);
  CHECK(std::abs(e2[0] - 1.0 / 6.0) < 1e-15);
  CHECK(std::abs(e2[1] - 1.0 / 6.0) < 1e-15);
  CHECK(std::abs(e2[2] - 0.706011329583298) < 1e-12);
  CHECK(std::abs(e2[3] - (-0.039344662916632)) < 1e-12);
  CHECK(std::abs(e2[3] - (1.0 / 3.0 - std::sqrt(5.0) / 6.0)) < 1e-15);

  for (std::size_t n = 2; n <= 8; ++n) {
    const auto e = local_output_eigenvalues_formula(n);
    const double sum = e[0] + e[1] + e[2] + e[3];
    CHECK(std::abs(sum - 1.0) < 1e-12);
    int negatives = 0;
    for (double x : e)
      if (x < -1e-9) ++negatives;
    CHECK(negatives == (n == 2 ? 1 : 0));
  }
  CHECK_THROWS_AS(local_output_eigenvalues_formula(1), parameter_error);
}

TEST_CASE("printed product-input matrix disagrees with the formula") {
  // the matrix annihilates |01> - |10>, so it always carries a zero
  // eigenvalue the closed-form set does not contain
  for (double alpha : {0.2, 1.0 / std::sqrt(2.0), 0.95}) {
    const ComplexMatrix m = product_input_local_matrix(2, alpha);
    CHECK(std::abs(m.trace().real() - 1.0) < 1e-12);
    const std::vector<double> eig = hermitian_eigenvalues(m);
    double smallest_abs = 1e9;
    for (double x : eig) smallest_abs = std::min(smallest_abs, std::abs(x));
    CHECK(smallest_abs < 1e-12);  // forced zero eigenvalue

    std::vector<double> formula(local_output_eigenvalues_formula(2).begin(),
                                local_output_eigenvalues_formula(2).end());
    CHECK_FALSE(test_helpers::multiset_close(eig, formula, 1e-3));
  }
}

TEST_CASE("entanglement thresholds by bisection") {
  const double remote = entanglement_threshold(
      [](double w) { return remote_output_matrix(AuxiliaryInput(w)); }, 0.0,
      0.4);
  CHECK(std::abs(remote - 0.109687625100100) < 1e-6);
  CHECK(std::abs(remote - (0.5 - std::sqrt(39.0) / 16.0)) < 1e-9);

  const double local = entanglement_threshold(
      [](double w) { return local_output_matrix(AuxiliaryInput(w), true); },
      0.0, 0.4);
  CHECK(std::abs(local - 0.066987298107781) < 1e-6);
  CHECK(std::abs(local - (0.5 - std::sqrt(48.0) / 16.0)) < 1e-9);

  CHECK_THROWS_AS(
      entanglement_threshold(
          [](double) { return DensityMatrix::maximally_mixed(4); }, 0.0, 0.4),
      no_crossing_error);
}

TEST_CASE("werner state anchor for the bisection machinery") {
  const double crossover = entanglement_threshold(
      [](double v) { return test_helpers::werner(v); }, 0.0, 0.9);
  CHECK(std::abs(crossover - 1.0 / 3.0) < 1e-6);

  CHECK(ppt_verdict(test_helpers::werner(0.5), DimsSpec{2, 2}, 1).entangled);
  CHECK_FALSE(
      ppt_verdict(test_helpers::werner(0.2), DimsSpec{2, 2}, 1).entangled);
}
