#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curvejac {

struct AcceptanceOptions {
  /// Directory holding nodal.curve, cusp.curve, lut.curve, elliptic_pair.curve.
  std::string fixture_dir;
  std::uint64_t seed = 20261015;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// What was checked, or the first mismatch.
  std::string detail;
};

/// Criteria 1-8. A criterion that throws is reported as failed with the message.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

}  // namespace curvejac
