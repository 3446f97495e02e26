#include "divinfo/random.hpp"

#include <cmath>
#include <numbers>

#include "divinfo/errors.hpp"

namespace divinfo {

double Rng::uniform() {
  // (m + 0.5) / 2^53 lies strictly inside (0, 1).
  const std::uint64_t m = engine_() >> 11;
  return (static_cast<double>(m) + 0.5) * 0x1.0p-53;
}

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw InvalidArgument("Rng::index needs lo <= hi");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return lo + static_cast<std::size_t>(engine_());
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t r = engine_();
  while (r >= limit) r = engine_();
  return lo + static_cast<std::size_t>(r % span);
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

}  // namespace divinfo
