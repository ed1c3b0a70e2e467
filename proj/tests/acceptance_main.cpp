#include <iostream>

#include "h2cert/acceptance.hpp"

int main() {
  const auto scale = h2cert::acceptance_scale_from_env();
  bool all = true;
  const auto results = h2cert::run_acceptance(scale, [](const h2cert::CriterionResult& r) {
    std::cout << h2cert::format_criterion(r) << std::endl;
  });
  for (const auto& r : results) all = all && r.pass;
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
