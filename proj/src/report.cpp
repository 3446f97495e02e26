#include "divinfo/report.hpp"

#include <algorithm>
#include <cmath>

namespace divinfo {

BoundReport BoundReport::less_equal(std::string name, double lhs, double rhs, double tol,
                                    std::vector<std::string> flags) {
  BoundReport r{std::move(name), lhs, rhs, rhs - lhs, tol, false, Relation::less_equal,
                std::move(flags)};
  r.pass = r.recompute();
  return r;
}

BoundReport BoundReport::equal(std::string name, double lhs, double rhs, double tol,
                               std::vector<std::string> flags) {
  BoundReport r{std::move(name), lhs, rhs, rhs - lhs, tol, false, Relation::equal,
                std::move(flags)};
  r.pass = r.recompute();
  return r;
}

bool BoundReport::recompute() const {
  // NaN on either side fails both relations.
  if (relation == Relation::equal) return std::abs(lhs - rhs) <= tol;
  return lhs <= rhs + tol;
}

bool all_pass(const std::vector<BoundReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.pass; });
}

}  // namespace divinfo
