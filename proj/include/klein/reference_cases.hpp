#pragma once

#include <string>
#include <vector>

namespace klein {

struct Grid {
  int gmax = 5;
  int kmax = 5;
};

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;  // failure reason, or a short summary on success
};

/// Replays the reference values for the doubles, the tower and the covering
/// engine. Grid sweeps range over 1 <= g <= gmax, 1 <= k <= kmax. The result
/// order is fixed.
std::vector<CaseResult> run_reference_cases(const Grid& grid);

}  // namespace klein
