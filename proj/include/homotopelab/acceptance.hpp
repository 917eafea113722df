#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace homotopelab {

struct AcceptanceOptions {
  /// Fewer random samples in the sampled checks; exact checks are unchanged.
  bool quick = false;
  std::uint64_t seed = 20240611;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

/// Runs every acceptance check in order. A check that exceeds its time limit
/// fails even when its mathematical content holds.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

}  // namespace homotopelab
