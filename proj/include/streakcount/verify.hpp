#pragma once

#include "streakcount/bigcount.hpp"
#include "streakcount/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace streakcount::verify {

/// Perturbs one closed-form count by +1 so the suites can be shown to fail.
struct Fault {
  Ending ending = Ending::heady;
  int s = 0;
  int n = 0;
};

struct Options {
  int max_n = 64;
  int oracle_max = 16;
  int oracle_cap = 24;
  std::optional<Fault> fault;
};

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// Runs every identity and cross-check suite. Throws oracle::CapExceeded if
/// oracle_max exceeds oracle_cap.
std::vector<SuiteResult> run_all(const Options& options);

}  // namespace streakcount::verify
