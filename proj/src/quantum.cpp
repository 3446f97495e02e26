#include "divinfo/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "divinfo/errors.hpp"
#include "divinfo/extremal.hpp"
#include "divinfo/measures.hpp"
#include "divinfo/random.hpp"

namespace divinfo::quantum {

namespace {

constexpr int kMaxSweeps = 200;
constexpr double kOffDiagonalTarget = 1e-14;

double frobenius(const ComplexMatrix& a, bool off_diagonal_only) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (off_diagonal_only && i == j) continue;
      sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

void check_dimension(std::size_t d) {
  if (d == 0 || d > kMaxDimension) {
    throw InvalidArgument("matrix dimension must be in [1, " + std::to_string(kMaxDimension) +
                          "], got " + std::to_string(d));
  }
}

// One complex Jacobi rotation annihilating a(p, q). The rotation is a phase
// on column q, which makes a(p, q) real, followed by a real plane rotation.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex gpp = c;
  const Complex gpq = s;
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);

  const std::size_t d = a.dim();
  for (std::size_t k = 0; k < d; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < d; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  for (std::size_t k = 0; k < d; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) m(j, i) = std::conj((*this)(i, j));
  }
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < d_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = i; j < d_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimensions differ");
  const std::size_t d = a.dim();
  ComplexMatrix c(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t l = 0; l < d; ++l) {
      const Complex ail = a(i, l);
      for (std::size_t j = 0; j < d; ++j) c(i, j) += ail * b(l, j);
    }
  }
  return c;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimensions differ");
  ComplexMatrix c = a;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) += b(i, j);
  }
  return c;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) {
  ComplexMatrix c = a;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) *= s;
  }
  return c;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix dimensions differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  }
  return worst;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& h) {
  check_dimension(h.dim());
  if (h.hermitian_defect() > kHermitianTolerance) {
    throw InvalidArgument("matrix is not Hermitian (defect " +
                          std::to_string(h.hermitian_defect()) + ")");
  }
  const std::size_t d = h.dim();
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(d);
  const double target = kOffDiagonalTarget * std::max(1.0, frobenius(h, false));

  int sweeps = 0;
  while (frobenius(a, true) > target) {
    if (sweeps == kMaxSweeps) {
      throw ConvergenceFailure("Jacobi eigensolver did not converge in " +
                               std::to_string(kMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) rotate(a, v, p, q);
    }
    ++sweeps;
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  EigenSystem out{std::vector<double>(d), ComplexMatrix(d), sweeps};
  for (std::size_t col = 0; col < d; ++col) {
    out.values[col] = a(order[col], order[col]).real();
    for (std::size_t row = 0; row < d; ++row) out.vectors(row, col) = v(row, order[col]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eigensystem(h).values;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  check_dimension(m_.dim());
  if (m_.hermitian_defect() > kHermitianTolerance) {
    throw InvalidArgument("density matrix is not Hermitian");
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex(1.0)) > kTraceTolerance) {
    throw InvalidArgument("density matrix trace is " + std::to_string(tr.real()) + ", not 1");
  }
  const auto values = hermitian_eigenvalues(m_);
  if (values.back() < kEigenvalueFloor) {
    throw NotPositiveSemidefinite("density matrix has eigenvalue " +
                                  std::to_string(values.back()));
  }
}

DensityMatrix DensityMatrix::completely_mixed(std::size_t d) {
  check_dimension(d);
  return DensityMatrix((1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d));
}

DensityMatrix DensityMatrix::diagonal(const Distribution& p) {
  return DensityMatrix(ComplexMatrix::diagonal(p.values()));
}

DensityMatrix DensityMatrix::pure(const std::vector<Complex>& psi) {
  ComplexMatrix m(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    for (std::size_t j = 0; j < psi.size(); ++j) m(i, j) = psi[i] * std::conj(psi[j]);
  }
  return DensityMatrix(std::move(m));
}

Distribution spectrum_distribution(const DensityMatrix& rho) {
  std::vector<double> values = hermitian_eigenvalues(rho.matrix());
  bool clamped = false;
  for (double& x : values) {
    if (x < kEigenvalueFloor) {
      throw NotPositiveSemidefinite("eigenvalue " + std::to_string(x) + " below tolerance");
    }
    if (x < 0.0) {
      x = 0.0;
      clamped = true;
    }
  }
  return Distribution(std::move(values), clamped);
}

double q_relative_entropy_mixed(const DensityMatrix& rho) {
  return relative_entropy(spectrum_distribution(rho), Distribution::uniform(rho.dim())).value();
}

double q_divergence_mixed_lb(const DensityMatrix& rho) {
  return divergence_uniform(spectrum_distribution(rho));
}

QuantumEnsemble::QuantumEnsemble(Distribution weights, std::vector<DensityMatrix> states)
    : weights_(std::move(weights)), states_(std::move(states)) {
  if (states_.size() != weights_.size()) {
    throw DimensionMismatch("quantum ensemble weight and state counts differ");
  }
  for (const auto& s : states_) {
    if (s.dim() != states_.front().dim()) {
      throw DimensionMismatch("quantum ensemble states differ in dimension");
    }
  }
}

ComplexMatrix QuantumEnsemble::average() const {
  ComplexMatrix avg(dim());
  for (std::size_t j = 0; j < size(); ++j) avg = avg + weights_[j] * states_[j].matrix();
  return avg;
}

double QuantumEnsemble::mixed_average_defect() const {
  const auto mixed = (1.0 / static_cast<double>(dim())) * ComplexMatrix::identity(dim());
  return max_abs_difference(average(), mixed);
}

ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed) {
  check_dimension(d);
  Rng rng(seed);
  ComplexMatrix z(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  // Modified Gram-Schmidt over columns, with one reorthogonalisation pass.
  for (std::size_t col = 0; col < d; ++col) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < col; ++prev) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < d; ++i) dot += std::conj(z(i, prev)) * z(i, col);
        for (std::size_t i = 0; i < d; ++i) z(i, col) -= dot * z(i, prev);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm += std::norm(z(i, col));
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) throw ConvergenceFailure("random unitary: degenerate Gaussian sample");
    for (std::size_t i = 0; i < d; ++i) z(i, col) /= norm;
  }
  return z;
}

QuantumEnsemble conjugated_cyclic_qensemble(const Distribution& p, std::uint64_t seed) {
  const std::size_t n = p.size();
  const ComplexMatrix u = random_unitary(n, seed);
  const ComplexMatrix u_adj = u.adjoint();
  std::vector<DensityMatrix> states;
  states.reserve(n);
  std::vector<double> shifted(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) shifted[i] = p[(i + j) % n];
    ComplexMatrix rho = u * ComplexMatrix::diagonal(shifted) * u_adj;
    // Exact Hermitian symmetrisation; removes rounding asymmetry of the product.
    rho = 0.5 * (rho + rho.adjoint());
    states.emplace_back(std::move(rho));
  }
  return QuantumEnsemble(Distribution::uniform(n), std::move(states));
}

BoundReport check_quantum_ub(const QuantumEnsemble& qe, double tol) {
  const std::size_t d = qe.dim();
  if (d < 3) throw PreconditionViolated("quantum Holevo ceiling needs d >= 3");
  const double defect = qe.mixed_average_defect();
  if (defect > kMixedAverageTolerance) {
    throw PreconditionViolated("ensemble average deviates from I/d by " + std::to_string(defect));
  }
  double chi = 0.0;
  double kk = 0.0;
  for (std::size_t j = 0; j < qe.size(); ++j) {
    const double w = qe.weights()[j];
    if (w <= 0.0) continue;
    const Distribution spectrum = spectrum_distribution(qe.states()[j]);
    chi += w * relative_entropy(spectrum, Distribution::uniform(d)).value();
    kk += w * divergence_uniform(spectrum);
  }
  return BoundReport::less_equal("quantum_holevo_ceiling", chi,
                                 uniform_average_holevo_bound(kk, d), tol,
                                 {"K=" + std::to_string(kk)});
}

}  // namespace divinfo::quantum
