#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cekr {

enum class CheckStatus { pass, fail, skip, finding };

// "pass" / "fail" / "skip" / "finding".  A skip always carries its reason; a
// finding records a verified discrepancy in external source material that the
// implementation resolves, and does not affect the exit status.
std::string check_status_name(CheckStatus status);

struct CheckResult {
  std::string suite;
  std::string name;
  CheckStatus status = CheckStatus::fail;
  std::string detail;  // the exact values compared, or the skip reason
};

struct VerifyOptions {
  int threads = 1;
  // Upper end of oracle-facing grids.  5 is the guaranteed range; 6 requires
  // allow_n6 (and patience).
  int max_n = 5;
  // Upper end of the identity grids (partition identity and friends).
  int max_m = 12;
  // Randomized property trials per suite that uses them.
  int trials = 500;
  // Upper end of t for the randomized compression trials (the formula grids
  // run over their published fixed ranges regardless).
  int max_t = 2;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  bool allow_n6 = false;
  std::uint64_t node_budget = 400'000'000;
};

// The runnable suite names, in the order "all" runs them.
std::vector<std::string> verify_suite_names();

// Runs one suite (or "all") and returns its checks in deterministic order.
// Unknown suite names are an error.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts = {});

// True when nothing failed (skips and findings do not fail a run).
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cekr
