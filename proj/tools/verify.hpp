#pragma once

#include <string>
#include <vector>

namespace relbell::cli {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyOptions {
  /// Test hook: flips the sign of one entry of gamma^2 inside the algebra
  /// checks so the suite must report a failure.
  bool inject_fault = false;
  unsigned long long seed = 7;
};

/// Runs every invariant group of the library and reports the worst residual
/// of each against its tolerance.
std::vector<CheckResult> run_verify(const VerifyOptions& opts);

}  // namespace relbell::cli
