#include "streakcount/counting.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace streakcount {

namespace {

// Pascal triangle, half rows only (b <= a/2). Rows live in a deque so that
// references handed out stay valid while later rows are appended.
class PascalTriangle {
public:
  const BigCount& get(long long a, long long b) {
    if (b > a - b) b = a - b;
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(a) < rows_.size()) return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= static_cast<std::size_t>(a)) append_row();
    return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

private:
  void append_row() {
    const std::size_t a = rows_.size();
    std::vector<BigCount> row(a / 2 + 1);
    row[0] = 1;
    if (a > 0) {
      const auto& prev = rows_.back();
      const auto prev_at = [&](std::size_t b) -> const BigCount& {
        return prev[std::min(b, a - 1 - b)];
      };
      for (std::size_t b = 1; b < row.size(); ++b) row[b] = prev_at(b - 1) + prev_at(b);
    }
    rows_.push_back(std::move(row));
  }

  std::shared_mutex mutex_;
  std::deque<std::vector<BigCount>> rows_;
};

PascalTriangle& triangle() {
  static PascalTriangle instance;
  return instance;
}

const BigCount& zero() {
  static const BigCount value = 0;
  return value;
}

void require_length(int n, int minimum, const char* what) {
  if (n < minimum)
    throw std::invalid_argument(std::string(what) + " requires n >= " + std::to_string(minimum) + ", got " +
                                std::to_string(n));
}

}  // namespace

const BigCount& binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return zero();
  return triangle().get(a, b);
}

BigCount heady_count(int s, int n) {
  require_length(n, 1, "heady_count");
  const long long ns = static_cast<long long>(n) - s - 1;
  BigCount sum = 0;
  if (ns < 0) return sum;
  for (long long k = std::max(0LL, -static_cast<long long>(s)); k <= ns / 3; ++k)
    sum += binomial(2 * k + s, k) * binomial(ns - 2 * k, k);
  return sum;
}

BigCount taily_count(int s, int n) {
  require_length(n, 1, "taily_count");
  BigCount sum = s == 0 ? 1 : 0;
  const long long ns = static_cast<long long>(n) - s;
  if (ns < 0) return sum;
  for (long long k = std::max(1LL, -static_cast<long long>(s)); k <= ns / 3; ++k)
    sum += binomial(2 * k + s - 1, k - 1) * binomial(ns - 2 * k, k);
  return sum;
}

BigCount close_call_alice(int n) {
  require_length(n, 2, "close_call_alice");
  BigCount sum = 0;
  for (long long k = 1; k <= (n + 1) / 3; ++k) sum += binomial(2 * k - 1, k) * binomial(n - 2 * k, k - 1);
  return sum;
}

BigCount win_gap(int n) {
  require_length(n, 2, "win_gap");
  return heady_count(-1, n);
}

BigCount win_gap_by_increments(int n) {
  require_length(n, 2, "win_gap_by_increments");
  BigCount sum = 0;
  for (int i = 2; i <= n - 1; ++i) sum += heady_count(1, i);
  return sum;
}

std::optional<BigCount> win_gap_increment(int n) {
  if (n < 3) return std::nullopt;
  return heady_count(1, n - 1);
}

ScoreDistribution closed_form_distribution(int n) {
  ScoreDistribution table(n);
  for (int s = table.lowest_score(); s <= table.highest_score(); ++s) {
    table.set(Ending::heady, s, heady_count(s, n));
    table.set(Ending::taily, s, taily_count(s, n));
  }
  return table;
}

WinOdds win_odds(const ScoreDistribution& distribution) {
  WinOdds odds;
  odds.n = distribution.length();
  odds.alice_wins = distribution.alice_wins();
  odds.bob_wins = distribution.bob_wins();
  odds.ties = distribution.ties();
  odds.gap = odds.bob_wins - odds.alice_wins;
  odds.sequences = power_of_two(odds.n);
  return odds;
}

WinOdds win_odds(int n) { return win_odds(closed_form_distribution(n)); }

}  // namespace streakcount
