#pragma once

#include <cstddef>
#include <vector>

#include "divinfo/distribution.hpp"

// Entropy-minimising distribution under an observational-divergence budget,
// and the cyclic ensemble built from it.

namespace divinfo {

/// Support size n and divergence budget k (bits).
class ExtremalParams {
 public:
  /// Throws InvalidArgument unless n >= 2 and k is finite and positive.
  ExtremalParams(std::size_t n, double k);

  std::size_t n() const noexcept { return n_; }
  double k() const noexcept { return k_; }

  /// 16/n <= k < log2 n, the range in which the entropy bounds are proved.
  bool theorem_regime() const noexcept;

 private:
  std::size_t n_;
  double k_;
};

/// Root y > 0 of y log2(n y / x) = k.
///
/// Brackets the root on [x/n, hi] (the left end is always negative), expands
/// `hi` geometrically, bisects to width 1e-14 and finishes with Newton steps
/// using the derivative log2(e n y / x). The result satisfies
/// |y log2(n y / x) - k| <= 1e-12.
double solve_h(double x, std::size_t n, double k);

/// As solve_h, but `lower` (when below the root) tightens the left end.
/// `upper`, when positive and not below the root, tightens the right end.
double solve_h_from(double x, std::size_t n, double k, double lower, double upper = 0.0);

struct ExtremalProfile {
  ExtremalParams params;
  /// Cumulative values s_1..s_n; s_i = min(1, h(i)).
  std::vector<double> cumulative;
  /// One-based index of the first saturated cumulative value (s_i = 1).
  std::size_t crossover;
  /// p_1 = s_1, p_i = s_i - s_{i-1}; non-increasing.
  Distribution dist;
};

ExtremalProfile build_profile(const ExtremalParams& params);

/// k(ln log2(kn) - ln(6k) + 1) - log2(1 + k ln 2) - 1 - 1/ln 2.
/// Requires k n > 1 (DomainError). May be negative.
double f_lower(double k, std::size_t n);

/// k(ln log2(nk) - ln k + 1). Requires k n > 1 (DomainError).
double f_upper(double k, std::size_t n);

struct BoundPair {
  double f_lower;
  double f_upper;
};

BoundPair entropy_bounds(const ExtremalParams& params);

/// K(2 ln log2 n - ln K + 1) + 16, the Holevo ceiling for ensembles with a
/// uniform (or completely mixed) average and divergence information K.
/// The K -> 0 limit (16) is used at K = 0. Requires n >= 3.
double uniform_average_holevo_bound(double divergence_info, std::size_t n);

/// The n cyclic shifts of p with weight 1/n each; component j is
/// q_j[i] = p[(i + j) mod n]. The average is uniform.
Ensemble cyclic_ensemble(const Distribution& p);

struct StreamStats {
  double divergence;   ///< D(P || U_n)
  double rel_entropy;  ///< S(P || U_n)
  double s1;
  std::size_t crossover;
};

/// Measures of the extremal distribution computed in one forward pass with
/// O(1) memory. Matches build_profile + measures to 1e-10.
StreamStats stream_stats(const ExtremalParams& params);

}  // namespace divinfo
