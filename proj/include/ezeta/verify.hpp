#pragma once

#include <string>
#include <vector>

namespace ezeta {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every consistency suite up to s_max (>= 2). Each suite rebuilds the
/// tables it needs from scratch rather than reading the coefficient caches.
std::vector<SuiteResult> run_verification(unsigned long s_max);

}  // namespace ezeta
