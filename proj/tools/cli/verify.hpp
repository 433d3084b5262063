#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symvol/io/json.hpp"
#include "symvol/volumes.hpp"

namespace symvol::cli {

struct VerifyOptions {
  int max_complexity = 1;  ///< checks all stable (g, n) with 2g - 2 + n <= max_complexity
  std::uint64_t seed = 1;  ///< evaluation points and enumeration order
  /// Test harnesses only: run the recursion from these initial conditions.
  std::optional<VolumeBaseCases> corrupt_base_case;
};

enum class CheckStatus { kPass, kFail, kSkip };

struct CheckResult {
  std::string name;
  int genus = 0;
  int n = 0;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Stable (g, n) with n >= 1 and 2g - 2 + n <= c, ordered by complexity, then genus.
std::vector<std::pair<int, int>> verify_keys(int max_complexity);

/// Runs every cross-path check; keys are processed in parallel and the report
/// is assembled in key order. Throws std::invalid_argument if c < 1.
VerifyReport run_verify(const VerifyOptions& options);

std::string format_report(const VerifyReport& report);
io::Json to_json(const VerifyReport& report);

}  // namespace symvol::cli
