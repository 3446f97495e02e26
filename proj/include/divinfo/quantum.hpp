#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "divinfo/distribution.hpp"
#include "divinfo/report.hpp"

namespace divinfo::quantum {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxDimension = 64;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kEigenvalueFloor = -1e-9;
inline constexpr double kMixedAverageTolerance = 1e-9;

/// Dense square complex matrix, row major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t d) : d_(d), a_(d * d) {}

  static ComplexMatrix identity(std::size_t d);
  static ComplexMatrix diagonal(const std::vector<double>& diag);

  std::size_t dim() const noexcept { return d_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  /// max |a_ij - conj(a_ji)|
  double hermitian_defect() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(double s, const ComplexMatrix& a);

 private:
  std::size_t d_ = 0;
  std::vector<Complex> a_;
};

/// max |a_ij - b_ij|
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenSystem {
  std::vector<double> values;  ///< descending
  ComplexMatrix vectors;       ///< column i belongs to values[i]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass is at most
/// 1e-14 (relative to max(1, ||H||_F)). Throws InvalidArgument for
/// non-Hermitian input or d > kMaxDimension, ConvergenceFailure after 200
/// sweeps.
EigenSystem hermitian_eigensystem(const ComplexMatrix& h);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity, trace and eigenvalue floor.
  explicit DensityMatrix(ComplexMatrix m);

  static DensityMatrix completely_mixed(std::size_t d);
  static DensityMatrix diagonal(const Distribution& p);
  /// |psi><psi| for a normalised state vector.
  static DensityMatrix pure(const std::vector<Complex>& psi);

  std::size_t dim() const noexcept { return m_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  ComplexMatrix m_;
};

/// Eigenvalues as a descending Distribution. Values in [-1e-9, 0) are
/// clamped to zero and the vector renormalised.
Distribution spectrum_distribution(const DensityMatrix& rho);

/// S(rho || I/d) = log2 d - H(spectrum).
double q_relative_entropy_mixed(const DensityMatrix& rho);

/// D(spectrum || U_d). A lower bound on the observational divergence of
/// rho against I/d; it is not claimed to equal it.
double q_divergence_mixed_lb(const DensityMatrix& rho);

class QuantumEnsemble {
 public:
  /// Throws DimensionMismatch if state dimensions differ or counts disagree.
  QuantumEnsemble(Distribution weights, std::vector<DensityMatrix> states);

  std::size_t size() const noexcept { return states_.size(); }
  std::size_t dim() const noexcept { return states_.front().dim(); }
  const Distribution& weights() const noexcept { return weights_; }
  const std::vector<DensityMatrix>& states() const noexcept { return states_; }

  ComplexMatrix average() const;
  /// Max deviation of the average from I/d.
  double mixed_average_defect() const;
  bool mixed_average() const { return mixed_average_defect() <= kMixedAverageTolerance; }

 private:
  Distribution weights_;
  std::vector<DensityMatrix> states_;
};

/// Unitary from modified Gram-Schmidt on a seeded standard complex Gaussian
/// matrix. The implied R factor has a real positive diagonal.
ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed);

/// The n cyclic shifts of p as diagonal states, each conjugated by one
/// shared random unitary, weighted uniformly. The average is I/n.
QuantumEnsemble conjugated_cyclic_qensemble(const Distribution& p, std::uint64_t seed);

/// chi <= K(2 ln log2 d - ln K + 1) + 16 with K the spectral divergence
/// lower bound. Throws PreconditionViolated if the average is not
/// completely mixed or d < 3.
BoundReport check_quantum_ub(const QuantumEnsemble& qe, double tol = 1e-9);

}  // namespace divinfo::quantum
