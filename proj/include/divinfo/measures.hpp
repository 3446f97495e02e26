#pragma once

#include <compare>
#include <cstddef>
#include <limits>

#include "divinfo/distribution.hpp"

// Classical information measures. Every quantity is in bits (log base 2).

namespace divinfo {

/// Non-negative number of bits, or +infinity.
class ExtendedBits {
 public:
  constexpr ExtendedBits() = default;
  /// Throws InvalidArgument for NaN or negative input.
  explicit ExtendedBits(double bits);

  static constexpr ExtendedBits infinity() noexcept {
    ExtendedBits b;
    b.bits_ = std::numeric_limits<double>::infinity();
    return b;
  }

  bool is_infinite() const noexcept { return bits_ == std::numeric_limits<double>::infinity(); }
  bool is_finite() const noexcept { return !is_infinite(); }
  /// The stored value; +inf when infinite.
  double value() const noexcept { return bits_; }

  friend auto operator<=>(const ExtendedBits&, const ExtendedBits&) = default;

 private:
  double bits_ = 0.0;
};

inline constexpr std::size_t kMaxExhaustiveSupport = 24;
inline constexpr double kMajorizationTolerance = 1e-12;
inline constexpr double kUniformAverageTolerance = 1e-9;

/// Entries in non-increasing order; ties keep their original order.
Distribution sort_descending(const Distribution& p);

double entropy(const Distribution& p);

/// Sum of p_i log(p_i / q_i); infinite iff some p_i > 0 meets q_i = 0.
ExtendedBits relative_entropy(const Distribution& p, const Distribution& q);

double probability_of(const Distribution& p, const Event& e);

/// Observational divergence max_E P(E) log(P(E)/Q(E)) by enumerating every
/// non-empty event. Limited to kMaxExhaustiveSupport points.
ExtendedBits divergence_exact(const Distribution& p, const Distribution& q);

/// Observational divergence against the uniform distribution, using the
/// fact that the maximising event may be taken to be a prefix of P sorted in
/// descending order. O(n log n).
double divergence_uniform(const Distribution& p);

/// P majorises Q: each prefix sum of P sorted descending dominates the
/// corresponding one of Q, up to kMajorizationTolerance.
bool majorizes(const Distribution& p, const Distribution& q);

Distribution ensemble_average(const Ensemble& e);

ExtendedBits holevo_information(const Ensemble& e);

enum class DivergenceStrategy {
  automatic,        ///< uniform_average if the average is uniform, else exhaustive
  exhaustive,       ///< divergence_exact against the ensemble average
  uniform_average,  ///< divergence_uniform; requires a uniform average
};

ExtendedBits divergence_information(const Ensemble& e,
                                    DivergenceStrategy strategy = DivergenceStrategy::automatic);

}  // namespace divinfo
