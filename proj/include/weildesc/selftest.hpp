#pragma once

#include <string>
#include <vector>

namespace weildesc {

struct SelftestCase {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The worked examples and fixed-value cases of every module, each a hard
/// assertion, plus two controls that must fail in a specific way.
std::vector<SelftestCase> run_selftest();

/// Example input: Q(t) with d(t) = 1, B = Q(t)[b]/(b^2 - t), equation x' = 0.
extern const char* const kSquareRootExample;

}  // namespace weildesc
