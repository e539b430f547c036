#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "qsa/qsa.hpp"

using namespace qsa;

namespace {
const double kLog2_3 = 1.584962500721156;
}

TEST_CASE("kron basics") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_abs_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

  const ComplexMatrix p0 = PureState::basis(2, 0).projector();
  const ComplexMatrix p1 = PureState::basis(2, 1).projector();
  ComplexMatrix expect(4, 4);
  expect(1, 1) = 1.0;  // |01><01|
  CHECK(max_abs_diff(kron(p0, p1), expect) == 0.0);
}

TEST_CASE("kron mixed-product rule and Bell fixed point") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_unitary(2, rng);
    const ComplexMatrix b = random_unitary(3, rng);
    const ComplexMatrix c = random_unitary(2, rng);
    const ComplexMatrix d = random_unitary(3, rng);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  }
  // X (x) X leaves the Bell state fixed: verified by direct multiply.
  const std::vector<cplx> bell = bell_purification(0.5).amplitudes();
  const std::vector<cplx> rotated = kron(pauli_x(), pauli_x()) * bell;
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(rotated[i] - bell[i]) < 1e-15);
  }
}

TEST_CASE("kron rejects oversized results") {
  const ComplexMatrix big(100, 100);
  CHECK_THROWS_AS(kron(big, big), dimension_error);
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
  const DensityMatrix reduced =
      partial_trace(test_helpers::bell_state(), DimsSpec{2, 2}, 0);
  CHECK(max_abs_diff(reduced.matrix(),
                     DensityMatrix::maximally_mixed(2).matrix()) < 1e-15);
}

TEST_CASE("partial trace / kron adjointness") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(2, 4);
  for (int t = 0; t < 100; ++t) {
    const std::size_t da = dim(rng);
    const std::size_t db = dim(rng);
    const DensityMatrix a = random_density_matrix(da, rng);
    const DensityMatrix b = random_density_matrix(db, rng);
    const DensityMatrix ab = DensityMatrix(kron(a.matrix(), b.matrix()));
    CHECK(max_abs_diff(partial_trace(ab, DimsSpec{da, db}, 1).matrix(),
                       a.matrix()) < 1e-12);
    CHECK(max_abs_diff(partial_trace(ab, DimsSpec{da, db}, 0).matrix(),
                       b.matrix()) < 1e-12);
  }
}

TEST_CASE("partial trace elementary operator rule") {
  // Tr_2 of |i><k| (x) |j><l| = <l|j> |i><k|
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = 0; l < 3; ++l) {
          ComplexMatrix a(2, 2);
          a(i, k) = 1.0;
          ComplexMatrix b(3, 3);
          b(j, l) = 1.0;
          const ComplexMatrix got =
              partial_trace(kron(a, b), DimsSpec{2, 3}, 1);
          ComplexMatrix want(2, 2);
          want(i, k) = (j == l) ? 1.0 : 0.0;
          CHECK(max_abs_diff(got, want) == 0.0);
        }
}

TEST_CASE("partial trace validates dims") {
  CHECK_THROWS_AS(
      partial_trace(test_helpers::bell_state(), DimsSpec{2, 3}, 0),
      dimension_error);
  CHECK_THROWS_AS(
      partial_trace(test_helpers::bell_state(), DimsSpec{2, 2}, 5),
      dimension_error);
}

TEST_CASE("partial transpose of a product state stays positive") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const DensityMatrix a = random_density_matrix(2, rng);
    const DensityMatrix b = random_density_matrix(3, rng);
    const ComplexMatrix pt = partial_transpose(
        DensityMatrix(kron(a.matrix(), b.matrix())), DimsSpec{2, 3}, 1);
    CHECK(max_abs_diff(pt, kron(a.matrix(), b.matrix().transpose())) < 1e-14);
    CHECK(hermitian_eigenvalues(pt).front() > -1e-12);
  }
}

TEST_CASE("partial transpose of the Bell state has spectrum {-1/2, 1/2 x3}") {
  const ComplexMatrix pt =
      partial_transpose(test_helpers::bell_state(), DimsSpec{2, 2}, 1);
  const std::vector<double> eig = hermitian_eigenvalues(pt);
  const std::vector<double> want{-0.5, 0.5, 0.5, 0.5};
  CHECK(test_helpers::max_abs_gap(eig, want) < 1e-12);
}

TEST_CASE("partial transpose identities") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho = random_density_matrix(4, rng);
    const DimsSpec dims{2, 2};
    const ComplexMatrix pt_b = partial_transpose(rho, dims, 1);
    // involution
    CHECK(max_abs_diff(partial_transpose(pt_b, dims, 1), rho.matrix()) <
          1e-12);
    // T_A equals the full transpose of T_B
    CHECK(max_abs_diff(partial_transpose(rho, dims, 0), pt_b.transpose()) <
          1e-14);
    // trace preserved
    CHECK(std::abs(pt_b.trace() - rho.matrix().trace()) < 1e-14);
  }
}

TEST_CASE("hermitian eigenvalues on known spectra") {
  CHECK(test_helpers::max_abs_gap(
            hermitian_eigenvalues(ComplexMatrix::from_rows(
                {{3.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 2.0}})),
            {1.0, 2.0, 3.0}) < 1e-14);
  CHECK(test_helpers::max_abs_gap(hermitian_eigenvalues(pauli_x()),
                                  {-1.0, 1.0}) < 1e-14);
  CHECK(test_helpers::max_abs_gap(
            hermitian_eigenvalues(DensityMatrix::maximally_mixed(2).matrix()),
            {0.5, 0.5}) < 1e-15);
}

TEST_CASE("hermitian eigensystem residuals and trace identity") {
  std::mt19937_64 rng(19);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> dim(2, 16);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = dim(rng);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx(g(rng), g(rng));
    m = cplx(0.5, 0.0) * (m + m.dagger());
    const EigenSystem es = hermitian_eigensystem(m);

    double eig_sum = 0.0;
    for (double v : es.values) eig_sum += v;
    CHECK(std::abs(eig_sum - m.trace().real()) < 1e-9);

    for (std::size_t k = 0; k < n; ++k) {
      std::vector<cplx> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = es.vectors(i, k);
      const std::vector<cplx> mv = m * v;
      double residual2 = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        residual2 += std::norm(mv[i] - es.values[k] * v[i]);
      CHECK(std::sqrt(residual2) < 1e-9);
    }
  }
}

TEST_CASE("hermitian eigenvalues rejects non-hermitian input") {
  CHECK_THROWS_AS(
      hermitian_eigenvalues(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})),
      contract_violation);
}

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy({0.5, 0.5}) == 1.0);
  CHECK(std::abs(shannon_entropy({1.0 / 3, 1.0 / 3, 1.0 / 3}) - kLog2_3) <
        1e-12);
  CHECK(shannon_entropy({1.0, 0.0}) == 0.0);
  // distribution at the window edge of the capacity curve
  const double omega = 0.5 - std::sqrt(39.0) / 16.0;
  const double h =
      shannon_entropy({2.0 * omega / 3.0, 1.0 / 3.0, (2.0 - 2.0 * omega) / 3.0});
  CHECK(std::abs(h - 1.250944515131142) < 1e-12);
  // tiny negatives are clamped, larger ones rejected
  CHECK(shannon_entropy({1.0, -1e-13}) == 0.0);
  CHECK_THROWS_AS(shannon_entropy({0.9, 0.2}), normalization_error);
  CHECK_THROWS_AS(shannon_entropy({1.0, -1e-6}), normalization_error);
}

TEST_CASE("von Neumann entropy") {
  std::mt19937_64 rng(23);
  CHECK(von_neumann_entropy(DensityMatrix::from_pure(
            random_pure_state(4, rng))) < 1e-12);
  CHECK(std::abs(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) - 1.0) <
        1e-12);
  for (std::size_t d = 2; d <= 8; ++d) {
    CHECK(std::abs(von_neumann_entropy(DensityMatrix::maximally_mixed(d)) -
                   std::log2(double(d))) < 1e-12);
  }
}

TEST_CASE("entropy bounds over random states") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::size_t> dim(2, 8);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t d = dim(rng);
    const double s = von_neumann_entropy(random_density_matrix(d, rng));
    CHECK(s >= 0.0);
    CHECK(s <= std::log2(double(d)) + 1e-12);
  }
}

TEST_CASE("spectrum of a tensor product is the pairwise products") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    const DensityMatrix a = random_density_matrix(3, rng);
    const DensityMatrix b = random_density_matrix(2, rng);
    const std::vector<double> ea = hermitian_eigenvalues(a.matrix());
    const std::vector<double> eb = hermitian_eigenvalues(b.matrix());
    std::vector<double> expect;
    for (double x : ea)
      for (double y : eb) expect.push_back(x * y);
    const std::vector<double> got =
        hermitian_eigenvalues(kron(a.matrix(), b.matrix()));
    CHECK(test_helpers::multiset_close(got, expect, 1e-9));
  }
}

TEST_CASE("reduce_to keeps the requested subsystems in order") {
  std::mt19937_64 rng(37);
  const DensityMatrix a = random_density_matrix(2, rng);
  const DensityMatrix b = random_density_matrix(2, rng);
  const DensityMatrix c = random_density_matrix(2, rng);
  const DensityMatrix abc =
      DensityMatrix(kron(kron(a.matrix(), b.matrix()), c.matrix()));
  const DensityMatrix ac = reduce_to(abc, DimsSpec{2, 2, 2}, {0, 2});
  CHECK(max_abs_diff(ac.matrix(), kron(a.matrix(), c.matrix())) < 1e-12);
}
