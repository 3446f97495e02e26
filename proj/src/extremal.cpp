#include "divinfo/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "divinfo/errors.hpp"

namespace divinfo {

namespace {

constexpr double kBisectionWidth = 1e-14;
constexpr double kRootResidual = 1e-12;
constexpr int kNewtonSteps = 8;

struct RootEquation {
  double n;
  double x;
  double k;

  double value(double y) const { return y * std::log2(n * y / x) - k; }
  double slope(double y) const { return std::log2(n * y / x) + std::numbers::log2e; }
};

void validate_solver_inputs(double x, std::size_t n, double k) {
  if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("solve_h needs x > 0");
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("solve_h needs k > 0");
  if (n == 0) throw InvalidArgument("solve_h needs n >= 1");
}

// Calls visit(i, s_i) for the unsaturated cumulative values i = 1, 2, ...
// and returns the one-based crossover index. Cells beyond it have s_i = 1.
template <class Visit>
std::size_t for_each_unsaturated(const ExtremalParams& params, Visit&& visit) {
  const std::size_t n = params.n();
  const double k = params.k();
  const auto nd = static_cast<double>(n);
  double prev = 0.0;
  double prev2 = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto id = static_cast<double>(i);
    // h(i) >= 1 exactly when 1 * log2(n / i) <= k.
    if (std::log2(nd / id) - k <= 0.0) return i;
    // Concavity of h bounds the next value by linear extrapolation.
    const double upper = i >= 3 ? (2.0 * prev - prev2) * (1.0 + 1e-12) : 0.0;
    const double s = std::min(1.0, solve_h_from(id, n, k, prev, upper));
    visit(i, s);
    prev2 = prev;
    prev = s;
  }
  return n;  // unreachable: i = n always saturates
}

}  // namespace

ExtremalParams::ExtremalParams(std::size_t n, double k) : n_(n), k_(k) {
  if (n < 2) throw InvalidArgument("extremal construction needs n >= 2");
  if (!(k > 0.0) || !std::isfinite(k)) throw InvalidArgument("divergence budget k must be > 0");
}

bool ExtremalParams::theorem_regime() const noexcept {
  const auto nd = static_cast<double>(n_);
  return 16.0 / nd <= k_ && k_ < std::log2(nd);
}

double solve_h(double x, std::size_t n, double k) { return solve_h_from(x, n, k, 0.0, 0.0); }

double solve_h_from(double x, std::size_t n, double k, double lower, double upper) {
  validate_solver_inputs(x, n, k);
  const RootEquation g{static_cast<double>(n), x, k};

  // g < -k on (0, x/n], so x/n is a valid left end.
  double lo = x / g.n;
  if (lower > lo && g.value(lower) < 0.0) lo = lower;

  double hi = 0.0;
  if (upper > lo && g.value(upper) >= 0.0) {
    hi = upper;
  } else {
    const double limit = std::ldexp(x, 60);
    hi = 2.0 * lo;
    while (g.value(hi) < 0.0) {
      lo = hi;
      hi *= 2.0;
      if (hi > limit) {
        throw ConvergenceFailure("solve_h bracket expansion exceeded 2^60 x for x = " +
                                 std::to_string(x));
      }
    }
  }

  while (hi - lo > kBisectionWidth * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g.value(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  double y = 0.5 * (lo + hi);
  for (int step = 0; step < kNewtonSteps; ++step) {
    const double delta = g.value(y) / g.slope(y);
    const double next = y - delta;
    if (!(next >= lo && next <= hi)) break;
    if (next == y) break;
    y = next;
  }

  if (!(std::abs(g.value(y)) <= kRootResidual)) {
    throw ConvergenceFailure("solve_h residual " + std::to_string(g.value(y)) + " at x = " +
                             std::to_string(x));
  }
  return y;
}

ExtremalProfile build_profile(const ExtremalParams& params) {
  const std::size_t n = params.n();
  std::vector<double> cumulative(n, 1.0);
  const std::size_t crossover =
      for_each_unsaturated(params, [&](std::size_t i, double s) { cumulative[i - 1] = s; });

  std::vector<double> p(n, 0.0);
  p[0] = cumulative[0];
  for (std::size_t i = 1; i < n; ++i) p[i] = cumulative[i] - cumulative[i - 1];
  return ExtremalProfile{params, std::move(cumulative), crossover, Distribution(std::move(p))};
}

double f_lower(double k, std::size_t n) {
  const double kn = k * static_cast<double>(n);
  if (!(k > 0.0) || !(kn > 1.0)) throw DomainError("f_lower requires k > 0 and k n > 1");
  using std::numbers::ln2;
  return k * (std::log(std::log2(kn)) - std::log(6.0 * k) + 1.0) - std::log2(1.0 + k * ln2) -
         1.0 - 1.0 / ln2;
}

double f_upper(double k, std::size_t n) {
  const double kn = k * static_cast<double>(n);
  if (!(k > 0.0) || !(kn > 1.0)) throw DomainError("f_upper requires k > 0 and k n > 1");
  return k * (std::log(std::log2(kn)) - std::log(k) + 1.0);
}

BoundPair entropy_bounds(const ExtremalParams& params) {
  return {f_lower(params.k(), params.n()), f_upper(params.k(), params.n())};
}

double uniform_average_holevo_bound(double divergence_info, std::size_t n) {
  if (n < 3) throw DomainError("the Holevo ceiling needs n >= 3 (log2 n > 1)");
  if (!(divergence_info >= 0.0)) throw InvalidArgument("divergence information must be >= 0");
  const double kk = divergence_info;
  if (kk == 0.0) return 16.0;
  return kk * (2.0 * std::log(std::log2(static_cast<double>(n))) - std::log(kk) + 1.0) + 16.0;
}

Ensemble cyclic_ensemble(const Distribution& p) {
  const std::size_t n = p.size();
  std::vector<Distribution> components;
  components.reserve(n);
  std::vector<double> shifted(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) shifted[i] = p[(i + j) % n];
    components.emplace_back(shifted);
  }
  return Ensemble::with_uniform_weights(std::move(components));
}

StreamStats stream_stats(const ExtremalParams& params) {
  const auto nd = static_cast<double>(params.n());
  StreamStats out{0.0, 0.0, 1.0, 0};
  double prev = 0.0;
  const std::size_t crossover = for_each_unsaturated(params, [&](std::size_t i, double s) {
    if (i == 1) out.s1 = s;
    const double p = s - prev;
    if (p > 0.0) out.rel_entropy += p * std::log2(nd * p);
    out.divergence = std::max(out.divergence, s * std::log2(nd * s / static_cast<double>(i)));
    prev = s;
  });
  // The crossover cell takes the remaining mass; later cells are empty and
  // their prefixes (total mass 1) only lower the divergence term.
  const double last = 1.0 - prev;
  if (last > 0.0) out.rel_entropy += last * std::log2(nd * last);
  out.divergence = std::max(out.divergence, std::log2(nd / static_cast<double>(crossover)));
  out.rel_entropy = std::max(0.0, out.rel_entropy);
  out.crossover = crossover;
  return out;
}

}  // namespace divinfo
