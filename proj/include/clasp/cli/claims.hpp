#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace clasp {

/// One reproduced claim: `criterion` numbers the acceptance criteria
/// (0 for the cache-integrity check), `location` names where the claim is
/// made.
struct ClaimResult {
  int criterion = 0;
  std::string location;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  std::optional<double> budget_seconds;
};

struct ClaimOptions {
  /// When set, existing cache entries are compared with recomputation.
  std::optional<std::filesystem::path> cache_dir;
};

/// Runs every claim check; each one fails on a wrong value, an exception or
/// an exceeded time budget.
std::vector<ClaimResult> run_paper_claims(const ClaimOptions& opts = {});

bool all_passed(const std::vector<ClaimResult>& results);

}  // namespace clasp
