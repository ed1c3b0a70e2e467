#pragma once

#include <functional>
#include <string>
#include <vector>

namespace h2cert {

enum class AcceptanceScale { Small, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Reads ACCEPTANCE_SCALE (small | full); full when unset.
AcceptanceScale acceptance_scale_from_env();

using ProgressSink = std::function<void(const CriterionResult&)>;

std::vector<CriterionResult> run_acceptance(AcceptanceScale scale, const ProgressSink& progress = {});

std::string format_criterion(const CriterionResult& r);

}  // namespace h2cert
