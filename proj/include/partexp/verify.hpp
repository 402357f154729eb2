#pragma once

// Self-check suite: every invariant of the library evaluated against the
// brute-force oracles and the alternate algebraic routes.

#include <cstdint>
#include <string>
#include <vector>

#include "partexp/toeplitz.hpp"

namespace partexp {

struct VerifyConfig {
  /// Largest n for the partition-sum formulas and counting consistency.
  std::int64_t max_n = 25;
  /// Largest matrix order for the band/dense checks.
  std::size_t order = 12;
  /// Largest n for the integer recurrence identities.
  std::int64_t recurrence_n = 200;
  /// Largest n for brute-force partition counting.
  std::int64_t oracle_count_n = 40;
  std::uint64_t rng_seed = 0x5eed5eedULL;
  /// Product kernel used by exp/log. Swapped only for fault injection.
  BandProduct product = band_mul;
  bool parallel = true;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  /// First counterexample found; empty on success.
  std::string witness;
};

/// Runs all checks; results come back in a fixed order regardless of threading.
std::vector<CheckResult> run_verification(const VerifyConfig& config);

}  // namespace partexp
