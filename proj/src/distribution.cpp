#include "divinfo/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "divinfo/errors.hpp"

namespace divinfo {

Distribution::Distribution(std::vector<double> p, bool normalize) : p_(std::move(p)) {
  if (p_.empty()) throw InvalidDistribution("distribution must have at least one entry");
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (!std::isfinite(p_[i]) || p_[i] < 0.0) {
      throw InvalidDistribution("entry " + std::to_string(i) + " is negative or not finite");
    }
  }
  const double total = std::accumulate(p_.begin(), p_.end(), 0.0);
  if (normalize) {
    if (!(total > 0.0)) throw InvalidDistribution("cannot normalise a zero vector");
    for (double& x : p_) x /= total;
    return;
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw InvalidDistribution("entries sum to " + std::to_string(total) + ", not 1");
  }
}

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) throw InvalidArgument("uniform distribution needs n >= 1");
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::point_mass(std::size_t n, std::size_t index) {
  if (index >= n) throw InvalidArgument("point mass index out of range");
  std::vector<double> p(n, 0.0);
  p[index] = 1.0;
  return Distribution(std::move(p));
}

double max_abs_difference(const Distribution& a, const Distribution& b) {
  if (a.size() != b.size()) throw DimensionMismatch("support sizes differ");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

bool is_uniform(const Distribution& p, double tol) {
  const double u = 1.0 / static_cast<double>(p.size());
  return std::all_of(p.begin(), p.end(), [&](double x) { return std::abs(x - u) <= tol; });
}

Event::Event(std::vector<std::size_t> members) : members_(std::move(members)) {
  if (members_.empty()) throw InvalidArgument("event must be non-empty");
  std::vector<std::size_t> sorted = members_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("event members must be distinct");
  }
}

Ensemble::Ensemble(Distribution weights, std::vector<Distribution> components)
    : weights_(std::move(weights)), components_(std::move(components)) {
  if (components_.size() != weights_.size()) {
    throw DimensionMismatch("ensemble has " + std::to_string(weights_.size()) + " weights but " +
                            std::to_string(components_.size()) + " components");
  }
  const std::size_t n = components_.front().size();
  for (const auto& c : components_) {
    if (c.size() != n) throw DimensionMismatch("ensemble components differ in support size");
  }
}

Ensemble Ensemble::with_uniform_weights(std::vector<Distribution> components) {
  if (components.empty()) throw InvalidArgument("ensemble needs at least one component");
  auto w = Distribution::uniform(components.size());
  return Ensemble(std::move(w), std::move(components));
}

}  // namespace divinfo
