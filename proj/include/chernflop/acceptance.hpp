#pragma once

#include <functional>
#include <string>
#include <vector>

namespace chernflop {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct CriterionSpec {
  int id = 0;
  std::string title;
  double time_limit = 0;  // seconds; 0 means none
  std::function<bool(std::string&)> check;
};

std::vector<CriterionSpec> acceptance_criteria();
CriterionResult run_criterion(const CriterionSpec& spec);
std::vector<CriterionResult> run_acceptance();

}  // namespace chernflop
