#pragma once

#include "streakcount/bigcount.hpp"
#include "streakcount/core.hpp"
#include "streakcount/distribution.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace streakcount {

// ---------------------------------------------------------------------------
// First-order DP over score distributions.

/// Distribution for n = 1: one heady and one taily sequence, both scoring 0.
ScoreDistribution dp_initial();

/// Length n+1 table: appending 0 keeps a taily score and turns a heady
/// s+1 into s; appending 1 turns a heady s-1 into s and keeps a taily score.
ScoreDistribution dp_extend(const ScoreDistribution& table);

/// dp_initial() extended to length n.
ScoreDistribution dp_distribution(int n);

// ---------------------------------------------------------------------------
// Fixed-order incremental updates of the per-score binomial terms.

/// A term update divided unevenly. Only an implementation bug produces this.
class InexactDivision : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/**
 * Summands of the closed-form count for one score s at the current length.
 *
 * Heady: terms[i] = C(2k+s, k) C(n-s-1-2k, k).
 * Taily: terms[i] = C(2k+s-1, k-1) C(n-s-2k, k).
 * k runs from first_k() upward; frontier() is the pure first factor at the
 * largest k in use. The taily all-tails sequence is not part of the terms.
 */
class TermVector {
public:
  /// The vector at the shortest length where score s has a nonzero sum.
  static TermVector start(int s, Ending ending);

  /// Shortest length with at least one term for (s, ending).
  static int first_length(int s, Ending ending);

  int score() const { return s_; }
  Ending ending() const { return ending_; }
  int length() const { return n_; }
  int first_k() const { return first_k_; }
  const std::vector<BigCount>& terms() const { return terms_; }
  const BigCount& frontier() const { return frontier_; }

  /// Sum of terms; heady_count(s, n) or taily_count(s, n) - [s == 0].
  BigCount sum() const;

  /// Advance to length n+1. Each term grows by terms[i]*k / (N + 1 - 3k),
  /// N = n-s-1 (heady) or n-s (taily); a new term is appended whenever the
  /// k upper bound floor(N/3) moves up. Throws InexactDivision on any
  /// nonzero remainder.
  void extend();

  /// Divisions performed by extend() since start().
  std::uint64_t divisions() const { return divisions_; }

private:
  TermVector(int s, Ending ending);
  long long shifted_length() const;  // N for the current length

  int s_;
  Ending ending_;
  int n_ = 0;
  int first_k_ = 0;
  std::vector<BigCount> terms_;
  BigCount frontier_;
  std::uint64_t divisions_ = 0;
};

enum class SweepMode { heady, taily, both };

/// Optional restriction of an incremental sweep to a score window.
struct ScoreWindow {
  int lowest;
  int highest;
  bool contains(int s) const { return s >= lowest && s <= highest; }
};

/**
 * Incremental computation of successive distributions, keeping one
 * TermVector per (score, ending) and creating each as its score first
 * becomes reachable.
 */
class IncrementalSweep {
public:
  explicit IncrementalSweep(SweepMode mode = SweepMode::both,
                            std::optional<ScoreWindow> window = std::nullopt);

  int length() const { return n_; }

  /// Move to the next length (the first call reaches n = 1).
  void advance();

  /// Counts at the current length; entries outside the mode or window are 0.
  ScoreDistribution distribution() const;

  BigCount heady(int s) const;
  BigCount taily(int s) const;

  const std::map<int, TermVector>& heady_terms() const { return heady_; }
  const std::map<int, TermVector>& taily_terms() const { return taily_; }

  std::uint64_t divisions() const;

  /// Called with each TermVector right after it is created or extended.
  void on_update(std::function<void(const TermVector&)> hook) { hook_ = std::move(hook); }

private:
  void step(std::map<int, TermVector>& vectors, Ending ending);
  bool tracks(Ending ending) const;

  SweepMode mode_;
  std::optional<ScoreWindow> window_;
  int n_ = 0;
  std::map<int, TermVector> heady_;
  std::map<int, TermVector> taily_;
  std::function<void(const TermVector&)> hook_;
};

/// Runs an incremental sweep from n = 1 to n_max, handing each distribution
/// to `visit`.
void table_sweep(int n_max, SweepMode mode,
                 const std::function<void(const ScoreDistribution&)>& visit);

/// Distribution at length n from the incremental path.
ScoreDistribution incremental_distribution(int n);

}  // namespace streakcount
