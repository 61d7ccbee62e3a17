#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace spectral3 {

struct PropertyResult {
  std::string name;
  double max_violation = 0.0;  // worst observed violation / threshold ratio
  double threshold = 1.0;      // pass iff max_violation <= threshold
  bool passed = true;
};

/// Runs the cross-module property suites (identities, residuals, gradients,
/// oracle equivalences) with a deterministic RNG.
std::vector<PropertyResult> run_verification(std::uint64_t seed, int trials);

/// Prints one line per property; returns true iff everything passed.
bool report_verification(std::ostream& os, const std::vector<PropertyResult>& results);

}  // namespace spectral3
