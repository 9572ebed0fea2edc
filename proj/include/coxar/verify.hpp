#pragma once

// Invariant suites run by `coxar verify`. Each suite cross-checks two or more
// independent computations; brute-force Weyl-group oracles are skipped above
// the enumeration cap.

#include "coxar/quiverrep.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coxar {

enum class SuiteStatus { Pass, Fail, Skip };

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::Pass;
  std::string detail;  // counterexample on failure, reason on skip, summary on pass
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  /// Systems or orientations examined per suite before switching to a seeded sample.
  std::size_t exhaustive_limit = 400;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  /// Name of a table whose first entry gets its lowest bit flipped before
  /// comparison; see perturbable_tables().
  std::optional<std::string> perturb;
};

/// Names accepted by VerifyOptions::perturb.
const std::vector<std::string>& perturbable_tables();

/// Suite names in execution order.
const std::vector<std::string>& suite_names();

std::vector<SuiteResult> run_verification(DynkinType type, const VerifyOptions& options = {});

std::string to_string(SuiteStatus status);

}  // namespace coxar
