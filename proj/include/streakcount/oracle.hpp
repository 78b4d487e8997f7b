#pragma once

#include "streakcount/distribution.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace streakcount::oracle {

/// Largest n enumerated unless the caller raises the cap.
inline constexpr int default_cap = 24;
/// Hard ceiling imposed by the 64-bit packed representation.
inline constexpr int packed_limit = 62;

inline constexpr const char* cap_env_var = "STREAKCOUNT_ORACLE_CAP";
inline constexpr const char* cap_flag = "--oracle-cap";

/// Thrown when a request exceeds the active enumeration cap.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(int n, int cap);
  int requested() const { return n_; }
  int cap() const { return cap_; }

private:
  int n_;
  int cap_;
};

/// default_cap, or the value of STREAKCOUNT_ORACLE_CAP when it is set to a
/// positive integer. Throws std::invalid_argument on a malformed value.
int cap_from_environment();

struct Options {
  int cap = default_cap;
  /// Number of disjoint index ranges; 0 picks from hardware concurrency.
  unsigned partitions = 0;
};

/// Exhaustive count of every (score, last toss) class over all 2^n sequences.
/// Throws std::invalid_argument for n < 1 and CapExceeded above the cap.
ScoreDistribution enumerate_distribution(int n, const Options& options = {});

CloseCallTable close_call_table(int n, const Options& options = {});

/// Bob's winning-sequence count minus Alice's, by enumeration.
BigCount win_gap(int n, const Options& options = {});

/// Every length-n sequence with the given score and ending, in increasing
/// packed order. Subject to the same cap.
std::vector<TossSequence> sequences_with(int n, int s, Ending ending, const Options& options = {});

}  // namespace streakcount::oracle
