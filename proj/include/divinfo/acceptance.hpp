#pragma once

#include <functional>
#include <string>
#include <vector>

namespace divinfo::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

/// The release acceptance checks, in order.
std::vector<Criterion> acceptance_criteria();

/// Runs every criterion; exceptions are converted into failures.
std::vector<CriterionResult> run_acceptance_suite();

}  // namespace divinfo::verify
