#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace divinfo {

/// Finite probability vector over a sample space of `size()` points.
///
/// Construction validates that every entry is non-negative and that the
/// entries sum to one within `kSumTolerance`. Values are stored exactly as
/// given; renormalisation happens only when explicitly requested.
class Distribution {
 public:
  static constexpr double kSumTolerance = 1e-9;

  explicit Distribution(std::vector<double> p, bool normalize = false);
  Distribution(std::initializer_list<double> p) : Distribution(std::vector<double>(p)) {}

  static Distribution uniform(std::size_t n);
  /// Point mass on `index` (zero based).
  static Distribution point_mass(std::size_t n, std::size_t index = 0);

  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  std::span<const double> probabilities() const noexcept { return p_; }
  const std::vector<double>& values() const noexcept { return p_; }

  auto begin() const noexcept { return p_.begin(); }
  auto end() const noexcept { return p_.end(); }

  bool operator==(const Distribution&) const = default;

 private:
  std::vector<double> p_;
};

/// Largest absolute coordinate difference; throws DimensionMismatch.
double max_abs_difference(const Distribution& a, const Distribution& b);

/// True iff `p` is within `tol` (infinity norm) of the uniform distribution.
bool is_uniform(const Distribution& p, double tol = 1e-9);

/// A non-empty set of distinct zero-based sample indices.
class Event {
 public:
  explicit Event(std::vector<std::size_t> members);
  Event(std::initializer_list<std::size_t> members) : Event(std::vector<std::size_t>(members)) {}

  std::span<const std::size_t> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

 private:
  std::vector<std::size_t> members_;
};

/// Weighted collection of distributions on a common sample space.
class Ensemble {
 public:
  Ensemble(Distribution weights, std::vector<Distribution> components);

  /// Every component gets weight 1/m.
  static Ensemble with_uniform_weights(std::vector<Distribution> components);

  std::size_t size() const noexcept { return components_.size(); }
  std::size_t support_size() const noexcept { return components_.front().size(); }
  const Distribution& weights() const noexcept { return weights_; }
  double weight(std::size_t j) const { return weights_[j]; }
  const std::vector<Distribution>& components() const noexcept { return components_; }
  const Distribution& component(std::size_t j) const { return components_[j]; }

 private:
  Distribution weights_;
  std::vector<Distribution> components_;
};

}  // namespace divinfo
