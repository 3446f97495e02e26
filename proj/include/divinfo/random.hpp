#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace divinfo {

/// Seeded generator used for every reproducible test instance.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Variates are derived here rather than through <random>
/// distributions, whose algorithms differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer uniform on [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi);
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace divinfo
