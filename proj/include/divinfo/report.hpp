#pragma once

#include <string>
#include <vector>

namespace divinfo {

enum class Relation {
  less_equal,  ///< pass iff lhs <= rhs + tol
  equal,       ///< pass iff |lhs - rhs| <= tol
};

/// One named inequality (or equality) check with its evidence.
struct BoundReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  ///< rhs - lhs
  double tol = 0.0;
  bool pass = false;
  Relation relation = Relation::less_equal;
  std::vector<std::string> regime_flags;

  static BoundReport less_equal(std::string name, double lhs, double rhs, double tol,
                                std::vector<std::string> flags = {});
  static BoundReport equal(std::string name, double lhs, double rhs, double tol,
                           std::vector<std::string> flags = {});

  /// Recomputes the pass flag from (lhs, rhs, tol, relation).
  bool recompute() const;
};

bool all_pass(const std::vector<BoundReport>& reports);

}  // namespace divinfo
