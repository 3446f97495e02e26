#include "divinfo/measures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "divinfo/errors.hpp"

namespace divinfo {

namespace {

void require_same_size(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("support sizes " + std::to_string(p.size()) + " and " +
                            std::to_string(q.size()) + " differ");
  }
}

// Rounding can push a mathematically non-negative sum a few ulps below zero.
ExtendedBits non_negative_bits(double x) { return ExtendedBits(std::max(0.0, x)); }

// P(E) log2(P(E)/Q(E)) with 0 log 0 = 0; +inf when P(E) > 0 = Q(E).
double event_term(double pe, double qe) {
  if (pe <= 0.0) return 0.0;
  if (qe <= 0.0) return std::numeric_limits<double>::infinity();
  return pe * std::log2(pe / qe);
}

// Sums of `v` over every subset of the index range [first, first + count),
// indexed by bitmask. Each entry is a chain of at most `count` additions.
std::vector<double> subset_sums(const Distribution& v, std::size_t first, std::size_t count) {
  std::vector<double> sums(std::size_t{1} << count, 0.0);
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    sums[mask] = sums[mask & (mask - 1)] + v[first + low];
  }
  return sums;
}

}  // namespace

ExtendedBits::ExtendedBits(double bits) : bits_(bits) {
  if (std::isnan(bits) || bits < 0.0) {
    throw InvalidArgument("bit count must be non-negative, got " + std::to_string(bits));
  }
}

Distribution sort_descending(const Distribution& p) {
  std::vector<double> v = p.values();
  std::stable_sort(v.begin(), v.end(), std::greater<>());
  return Distribution(std::move(v));
}

double entropy(const Distribution& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

ExtendedBits relative_entropy(const Distribution& p, const Distribution& q) {
  require_same_size(p, q);
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0.0) continue;
    if (q[i] <= 0.0) return ExtendedBits::infinity();
    s += p[i] * std::log2(p[i] / q[i]);
  }
  return non_negative_bits(s);
}

double probability_of(const Distribution& p, const Event& e) {
  double total = 0.0;
  for (std::size_t i : e.members()) {
    if (i >= p.size()) {
      throw InvalidArgument("event index " + std::to_string(i) + " outside support of size " +
                            std::to_string(p.size()));
    }
    total += p[i];
  }
  return total;
}

ExtendedBits divergence_exact(const Distribution& p, const Distribution& q) {
  require_same_size(p, q);
  const std::size_t n = p.size();
  if (n > kMaxExhaustiveSupport) {
    throw TooLargeForExhaustive("exhaustive divergence supports n <= " +
                                std::to_string(kMaxExhaustiveSupport) + ", got " +
                                std::to_string(n));
  }
  // Split the index set in two halves so every event sum is one addition of
  // two table entries, without a running sum that would drift.
  const std::size_t low_bits = n / 2;
  const std::size_t high_bits = n - low_bits;
  const auto p_low = subset_sums(p, 0, low_bits);
  const auto q_low = subset_sums(q, 0, low_bits);
  const auto p_high = subset_sums(p, low_bits, high_bits);
  const auto q_high = subset_sums(q, low_bits, high_bits);

  double best = 0.0;
  for (std::size_t hi = 0; hi < p_high.size(); ++hi) {
    for (std::size_t lo = 0; lo < p_low.size(); ++lo) {
      if (hi == 0 && lo == 0) continue;
      const double term = event_term(p_high[hi] + p_low[lo], q_high[hi] + q_low[lo]);
      if (term == std::numeric_limits<double>::infinity()) return ExtendedBits::infinity();
      best = std::max(best, term);
    }
  }
  return ExtendedBits(best);
}

double divergence_uniform(const Distribution& p) {
  const Distribution sorted = sort_descending(p);
  const auto n = static_cast<double>(p.size());
  double prefix = 0.0;
  double best = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    prefix += sorted[i];
    if (prefix > 0.0) {
      best = std::max(best, prefix * std::log2(n * prefix / static_cast<double>(i + 1)));
    }
  }
  return best;
}

bool majorizes(const Distribution& p, const Distribution& q) {
  require_same_size(p, q);
  const Distribution ps = sort_descending(p);
  const Distribution qs = sort_descending(q);
  double tp = 0.0;
  double tq = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    tp += ps[i];
    tq += qs[i];
    if (tp < tq - kMajorizationTolerance) return false;
  }
  return true;
}

Distribution ensemble_average(const Ensemble& e) {
  std::vector<double> avg(e.support_size(), 0.0);
  for (std::size_t j = 0; j < e.size(); ++j) {
    const double w = e.weight(j);
    const auto& c = e.component(j);
    for (std::size_t i = 0; i < avg.size(); ++i) avg[i] += w * c[i];
  }
  return Distribution(std::move(avg));
}

ExtendedBits holevo_information(const Ensemble& e) {
  const Distribution avg = ensemble_average(e);
  double chi = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e.weight(j) <= 0.0) continue;
    const ExtendedBits s = relative_entropy(e.component(j), avg);
    if (s.is_infinite()) return ExtendedBits::infinity();
    chi += e.weight(j) * s.value();
  }
  return non_negative_bits(chi);
}

ExtendedBits divergence_information(const Ensemble& e, DivergenceStrategy strategy) {
  const Distribution avg = ensemble_average(e);
  const bool uniform_avg = is_uniform(avg, kUniformAverageTolerance);
  if (strategy == DivergenceStrategy::automatic) {
    if (uniform_avg) {
      strategy = DivergenceStrategy::uniform_average;
    } else if (avg.size() <= kMaxExhaustiveSupport) {
      strategy = DivergenceStrategy::exhaustive;
    } else {
      throw NotComputableExactly("ensemble average is not uniform and n = " +
                                 std::to_string(avg.size()) + " exceeds the exhaustive limit");
    }
  }
  if (strategy == DivergenceStrategy::uniform_average && !uniform_avg) {
    throw PreconditionViolated("uniform-average strategy requires a uniform ensemble average");
  }

  double d = 0.0;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e.weight(j) <= 0.0) continue;
    double term = 0.0;
    if (strategy == DivergenceStrategy::uniform_average) {
      term = divergence_uniform(e.component(j));
    } else {
      const ExtendedBits dj = divergence_exact(e.component(j), avg);
      if (dj.is_infinite()) return ExtendedBits::infinity();
      term = dj.value();
    }
    d += e.weight(j) * term;
  }
  return non_negative_bits(d);
}

}  // namespace divinfo
