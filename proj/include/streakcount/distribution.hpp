#pragma once

#include "streakcount/bigcount.hpp"
#include "streakcount/core.hpp"

#include <array>
#include <vector>

namespace streakcount {

/**
 * Counts of length-n sequences by (score, last toss).
 *
 * Storage is dense over min_score(n) .. max_score(n); lookups outside that
 * window read as zero, writes outside it throw std::out_of_range.
 */
class ScoreDistribution {
public:
  explicit ScoreDistribution(int n);

  int length() const { return n_; }
  int lowest_score() const { return min_score(n_); }
  int highest_score() const { return max_score(n_); }

  BigCount heady(int s) const { return at(Ending::heady, s); }
  BigCount taily(int s) const { return at(Ending::taily, s); }
  BigCount at(Ending ending, int s) const;

  void set(Ending ending, int s, BigCount value);
  void add(Ending ending, int s, const BigCount& value);

  BigCount total(Ending ending) const;
  BigCount total() const { return total(Ending::heady) + total(Ending::taily); }

  BigCount alice_wins() const;
  BigCount bob_wins() const;
  BigCount ties() const;
  /// Bob's winning sequences minus Alice's.
  BigCount win_gap() const { return bob_wins() - alice_wins(); }

  friend bool operator==(const ScoreDistribution&, const ScoreDistribution&) = default;

private:
  bool in_window(int s) const { return s >= lowest_score() && s <= highest_score(); }
  std::vector<BigCount>& row(Ending ending) { return ending == Ending::heady ? heady_ : taily_; }
  const std::vector<BigCount>& row(Ending ending) const {
    return ending == Ending::heady ? heady_ : taily_;
  }

  int n_;
  std::vector<BigCount> heady_;
  std::vector<BigCount> taily_;
};

/// The 2x5 cross-classification: last toss versus score bucket
/// {s > 1, s = 1, s = 0, s = -1, s < -1}. Index 0 holds h1/t1.
struct CloseCallTable {
  std::array<BigCount, 5> heady;
  std::array<BigCount, 5> taily;

  friend bool operator==(const CloseCallTable&, const CloseCallTable&) = default;
};

CloseCallTable bucket(const ScoreDistribution& distribution);

}  // namespace streakcount
