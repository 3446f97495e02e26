#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "divinfo/errors.hpp"
#include "divinfo/extremal.hpp"
#include "divinfo/measures.hpp"
#include "divinfo/quantum.hpp"
#include "divinfo/random.hpp"
#include "divinfo/verify.hpp"

namespace divinfo::quantum {
namespace {

ComplexMatrix random_hermitian(std::size_t d, Rng& rng) {
  ComplexMatrix h(d);
  for (std::size_t i = 0; i < d; ++i) {
    h(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < d; ++j) {
      h(i, j) = Complex(rng.normal(), rng.normal());
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

std::vector<double> eigen_oracle(const ComplexMatrix& h) {
  const auto d = static_cast<Eigen::Index>(h.dim());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = h(i, j);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + d);
  std::sort(v.rbegin(), v.rend());
  return v;
}

ComplexMatrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  ComplexMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (double x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

TEST(Eigensolver, SmallExamples) {
  const auto diag = hermitian_eigenvalues(ComplexMatrix::diagonal({0.2, 0.7, 0.1}));
  EXPECT_NEAR(diag[0], 0.7, 1e-15);
  EXPECT_NEAR(diag[1], 0.2, 1e-15);
  EXPECT_NEAR(diag[2], 0.1, 1e-15);

  const auto a = hermitian_eigenvalues(real_matrix({{0.5, 0.5}, {0.5, 0.5}}));
  EXPECT_NEAR(a[0], 1.0, 1e-14);
  EXPECT_NEAR(a[1], 0.0, 1e-14);

  const auto b = hermitian_eigenvalues(real_matrix({{0.5, 0.1}, {0.1, 0.5}}));
  EXPECT_NEAR(b[0], 0.6, 1e-14);
  EXPECT_NEAR(b[1], 0.4, 1e-14);
}

TEST(Eigensolver, MatchesEigenOnRandomHermitian) {
  Rng rng(17);
  for (std::size_t d : {1UL, 2UL, 3UL, 5UL, 8UL, 16UL, 33UL, 64UL}) {
    const auto h = random_hermitian(d, rng);
    const auto es = hermitian_eigensystem(h);
    const auto ref = eigen_oracle(h);
    ASSERT_EQ(es.values.size(), d);
    for (std::size_t i = 0; i < d; ++i) EXPECT_NEAR(es.values[i], ref[i], 1e-10) << "d=" << d;
    // H V = V diag(lambda) and V unitary.
    const auto hv = h * es.vectors;
    const auto vl = es.vectors * ComplexMatrix::diagonal(es.values);
    EXPECT_LE(max_abs_difference(hv, vl), 1e-10);
    EXPECT_LE(max_abs_difference(es.vectors.adjoint() * es.vectors, ComplexMatrix::identity(d)), 1e-12);
  }
}

TEST(Eigensolver, Errors) {
  ComplexMatrix skew(2);
  skew(0, 1) = 1.0;
  EXPECT_THROW(hermitian_eigensystem(skew), InvalidArgument);
  EXPECT_THROW(hermitian_eigensystem(ComplexMatrix::identity(65)), InvalidArgument);
}

TEST(DensityMatrix, Validation) {
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({0.5, 0.4})), InvalidArgument);
  EXPECT_THROW(DensityMatrix(ComplexMatrix::diagonal({1.2, -0.2})), NotPositiveSemidefinite);
  ComplexMatrix nh = ComplexMatrix::diagonal({0.5, 0.5});
  nh(0, 1) = Complex(0.0, 0.1);
  EXPECT_THROW(DensityMatrix{nh}, InvalidArgument);
  EXPECT_NO_THROW(DensityMatrix(real_matrix({{0.5, 0.5}, {0.5, 0.5}})));
}

TEST(Spectrum, Examples) {
  const auto mixed = DensityMatrix::completely_mixed(4);
  EXPECT_NEAR(q_relative_entropy_mixed(mixed), 0.0, 1e-14);
  EXPECT_NEAR(q_divergence_mixed_lb(mixed), 0.0, 1e-14);

  const DensityMatrix pure = DensityMatrix::pure({Complex(1, 0) / std::sqrt(2.0), Complex(0, 1) / std::sqrt(2.0)});
  const auto sp = spectrum_distribution(pure);
  EXPECT_NEAR(sp[0], 1.0, 1e-14);
  EXPECT_NEAR(q_relative_entropy_mixed(pure), 1.0, 1e-12);

  const Distribution p{0.7, 0.2, 0.1};
  const auto rho = DensityMatrix::diagonal(p);
  EXPECT_NEAR(q_relative_entropy_mixed(rho), 0.4281828512741166, 1e-12);
  EXPECT_NEAR(q_divergence_mixed_lb(rho), 0.7492725295239783, 1e-12);
}

TEST(RandomUnitary, UnitaryAndDeterministic) {
  for (std::size_t d : {1UL, 3UL, 8UL, 20UL}) {
    const auto u = random_unitary(d, 42);
    EXPECT_LE(max_abs_difference(u.adjoint() * u, ComplexMatrix::identity(d)), 1e-12);
    EXPECT_EQ(max_abs_difference(u, random_unitary(d, 42)), 0.0);
  }
  EXPECT_GT(max_abs_difference(random_unitary(4, 1), random_unitary(4, 2)), 0.0);
}

TEST(Spectrum, InvariantUnderConjugation) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = rng.index(2, 12);
    const auto p = verify::random_distribution(d, rng);
    const auto u = random_unitary(d, 1000 + trial);
    auto m = u * ComplexMatrix::diagonal(p.values()) * u.adjoint();
    m = 0.5 * (m + m.adjoint());
    const DensityMatrix rho(m);
    EXPECT_NEAR(q_relative_entropy_mixed(rho), relative_entropy(p, Distribution::uniform(d)).value(), 1e-10);
    EXPECT_NEAR(q_divergence_mixed_lb(rho), divergence_uniform(p), 1e-10);
  }
}

TEST(QuantumEnsemble, ConjugatedCyclicHasMixedAverage) {
  const Distribution p{0.5, 0.3, 0.15, 0.05};
  const auto qe = conjugated_cyclic_qensemble(p, 7);
  EXPECT_EQ(qe.size(), 4U);
  EXPECT_LE(qe.mixed_average_defect(), 1e-12);
  EXPECT_TRUE(qe.mixed_average());
}

TEST(QuantumEnsemble, Errors) {
  EXPECT_THROW(QuantumEnsemble(Distribution{0.5, 0.5},
                               {DensityMatrix::completely_mixed(2), DensityMatrix::completely_mixed(3)}),
               DimensionMismatch);
  EXPECT_THROW(QuantumEnsemble(Distribution{1.0},
                               {DensityMatrix::completely_mixed(2), DensityMatrix::completely_mixed(2)}),
               DimensionMismatch);
}

TEST(QuantumCeiling, AllMixedStates) {
  const QuantumEnsemble qe(Distribution{0.5, 0.5},
                           {DensityMatrix::completely_mixed(4), DensityMatrix::completely_mixed(4)});
  const auto r = check_quantum_ub(qe);
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.lhs, 0.0, 1e-14);
  EXPECT_NEAR(r.rhs, 16.0, 1e-12);
}

TEST(QuantumCeiling, ConjugatedExtremalProfile) {
  const auto prof = build_profile(ExtremalParams(64, 1.0));
  const auto r = check_quantum_ub(conjugated_cyclic_qensemble(prof.dist, 3));
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.rhs, 2 * std::log(6.0) + 17, 1e-8);  // K = 1, n = 64
  EXPECT_NEAR(r.lhs, relative_entropy(prof.dist, Distribution::uniform(64)).value(), 1e-9);
}

TEST(QuantumCeiling, BasisStates) {
  std::vector<DensityMatrix> states;
  for (std::size_t i = 0; i < 8; ++i) states.push_back(DensityMatrix::diagonal(Distribution::point_mass(8, i)));
  const auto r = check_quantum_ub(QuantumEnsemble(Distribution::uniform(8), states));
  EXPECT_TRUE(r.pass);
  EXPECT_NEAR(r.lhs, 3.0, 1e-12);
  EXPECT_NEAR(r.rhs, 22.29583686600433, 1e-10);
}

TEST(QuantumCeiling, Preconditions) {
  const QuantumEnsemble small(Distribution{1.0}, {DensityMatrix::completely_mixed(2)});
  EXPECT_THROW(check_quantum_ub(small), PreconditionViolated);
  const QuantumEnsemble skewed(Distribution{1.0}, {DensityMatrix::diagonal(Distribution{0.7, 0.2, 0.1})});
  EXPECT_THROW(check_quantum_ub(skewed), PreconditionViolated);
}

}  // namespace
}  // namespace divinfo::quantum
