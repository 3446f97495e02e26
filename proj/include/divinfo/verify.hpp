#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "divinfo/distribution.hpp"
#include "divinfo/random.hpp"
#include "divinfo/report.hpp"

namespace divinfo::verify {

/// Tolerances applied by the theorem checkers. `equality` is used for
/// identities that hold up to rounding, `slack` for proved inequalities.
struct Tolerances {
  double equality = 1e-12;
  double slack = 1e-9;
};

/// Maximum support size for which check_ensemble_theorem materialises the
/// cyclic ensemble.
inline constexpr std::size_t kMaxEnsembleCheckSize = 4096;

/// Divergence equals k, the entropy sandwich f_L <= S <= f_U, and the
/// per-coordinate sandwich of N p_i (both sides aggregated into one report).
/// Throws PreconditionViolated outside 16/n <= k < log2 n.
std::vector<BoundReport> check_distribution_theorem(std::size_t n, double k,
                                                    const Tolerances& tol = {});

/// Cyclic ensemble over the extremal distribution: uniform average,
/// D(E) <= k, chi(E) >= f_L, and transfer of D and chi from the single
/// distribution.
std::vector<BoundReport> check_ensemble_theorem(std::size_t n, double k,
                                                const Tolerances& tol = {});

/// chi(E) <= K(2 ln log2 n - ln K + 1) + 16. Requires a uniform ensemble
/// average and n >= 3.
BoundReport check_ub_theorem(const Ensemble& e, const Tolerances& tol = {});

/// The extremal distribution for k = D(R || U_n) majorises R and has at
/// least its relative entropy to uniform.
std::vector<BoundReport> check_majorization_extremality(const Distribution& r,
                                                        const Tolerances& tol = {});

/// D(E) <= chi(E) + 1 and chi(E) <= D(E)(n - 1), with exact divergence.
std::vector<BoundReport> check_pair_relations(const Ensemble& e, const Tolerances& tol = {});

// ---- instance generators -------------------------------------------------

/// Positive entries of varying skew, normalised.
Distribution random_distribution(std::size_t n, Rng& rng);

/// Like random_distribution, but roughly a fifth of the cells are zero.
Distribution random_sparse_distribution(std::size_t n, Rng& rng);

enum class UniformAverageMode { cyclic, complement_pair };

/// cyclic: n shifts of a random distribution with weight 1/n.
/// complement_pair: {(1/2, Q), (1/2, 2 U_n - Q)} with Q close to uniform.
Ensemble random_uniform_average_ensemble(std::size_t n, std::uint64_t seed,
                                         UniformAverageMode mode);

/// m components on n points with random (possibly sparse) weights.
Ensemble random_ensemble(std::size_t n, std::size_t m, Rng& rng);

// ---- sweep ---------------------------------------------------------------

struct SweepRow {
  std::size_t n = 0;
  double k = 0.0;
  double s1 = 0.0;
  std::size_t crossover = 0;
  double divergence = 0.0;
  double rel_entropy = 0.0;
  double f_lower = 0.0;
  double f_upper = 0.0;
  /// rel_entropy / (k log2 log2(nk))
  double theta_ratio = 0.0;
  bool theorem_regime = false;
  /// Set when nk <= 2; numeric fields are then NaN.
  bool skipped = false;
};

/// One row per (n, k) in grid order (n outer, k inner). In-regime rows are
/// checked against the entropy sandwich; a violation throws std::logic_error.
std::vector<SweepRow> sweep(const std::vector<std::size_t>& n_values,
                            const std::vector<double>& k_values, const Tolerances& tol = {});

// ---- string-commitment trade-offs ---------------------------------------

struct QscQuery {
  double n_bits;
  double b;
  /// Throws InvalidArgument unless n_bits > 0 and b >= 0.
  void validate() const;
};

/// Minimal binding parameter a implied by each trade-off for concealing
/// parameter b. Not clamped at zero.
struct QscBounds {
  double harry;    ///< a + b >= n (asymptotic, Holevo)
  double jain;     ///< a + b + 8 sqrt(b + 1) + 16 >= n (divergence)
  double jainchi;  ///< a + b + 8 sqrt(b + 2) + 17 >= n (Holevo, single shot)
};

QscBounds qsc_min_binding(const QscQuery& q);

}  // namespace divinfo::verify
