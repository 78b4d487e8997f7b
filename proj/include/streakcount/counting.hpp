#pragma once

#include "streakcount/bigcount.hpp"
#include "streakcount/core.hpp"
#include "streakcount/distribution.hpp"

#include <optional>
#include <string>

namespace streakcount {

/// C(a, b) exactly; zero whenever a < 0, b < 0 or b > a.
/// Backed by a lazily grown Pascal triangle shared across threads.
const BigCount& binomial(long long a, long long b);

/// Number of length-n sequences with score s ending in heads.
/// Zero outside -floor((n-1)/2) <= s <= n-1.
BigCount heady_count(int s, int n);

/// Number of length-n sequences with score s ending in tails, including the
/// all-tails sequence when s == 0. Zero outside -floor(n/2) <= s <= max(0, n-3).
BigCount taily_count(int s, int n);

inline BigCount count(Ending ending, int s, int n) {
  return ending == Ending::heady ? heady_count(s, n) : taily_count(s, n);
}

/// Heady close-call wins for Alice via the signature-count sum over k.
/// Requires n >= 2 (std::invalid_argument otherwise).
BigCount close_call_alice(int n);

/// Bob's winning sequences minus Alice's, as heady_count(-1, n).
/// Requires n >= 2.
BigCount win_gap(int n);

/// win_gap(n) as the running sum of heady_count(1, i), i = 2 .. n-1.
BigCount win_gap_by_increments(int n);

/// win_gap(n) - win_gap(n-1) = heady_count(1, n-1); undefined below n = 3.
std::optional<BigCount> win_gap_increment(int n);

/// Full (score, ending) table for length n from the closed forms.
ScoreDistribution closed_form_distribution(int n);

struct WinOdds {
  int n = 0;
  BigCount alice_wins;
  BigCount bob_wins;
  BigCount ties;
  BigCount gap;
  BigCount sequences;  ///< 2^n

  /// value / 2^n rounded half-even to `digits` places.
  std::string fraction_decimal(const BigCount& value, int digits) const {
    return to_fixed_point(value, sequences, digits);
  }
};

/// Throws std::invalid_argument for n < 1.
WinOdds win_odds(int n);
WinOdds win_odds(const ScoreDistribution& distribution);

}  // namespace streakcount
