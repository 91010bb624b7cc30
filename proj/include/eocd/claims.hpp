#pragma once

#include <string>
#include <vector>

// Reproducible checks of the published results, each with a time budget.
namespace eocd::claims {

struct ClaimResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0; // 0: no limit
};

int claim_count();
ClaimResult run_claim(int id);
std::vector<ClaimResult> run_all();

/// "PASS  3 complete bipartite K_{r,t} ... (0.01 s)"
std::string format(const ClaimResult& r);

} // namespace eocd::claims
