#pragma once

#include <string>
#include <vector>

namespace ufact {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the full cross-validation suite (construction–oracle equivalences,
/// witness-family numbers, decidability chain, implication chain). Every
/// check is exact; randomized parts use fixed seeds.
std::vector<CriterionResult> run_acceptance_suite();

}  // namespace ufact
