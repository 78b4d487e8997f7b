#include "streakcount/distribution.hpp"

#include <stdexcept>
#include <string>

namespace streakcount {

ScoreDistribution::ScoreDistribution(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("sequence length must be at least 1");
  const auto width = static_cast<std::size_t>(highest_score() - lowest_score() + 1);
  heady_.assign(width, 0);
  taily_.assign(width, 0);
}

BigCount ScoreDistribution::at(Ending ending, int s) const {
  if (!in_window(s)) return 0;
  return row(ending)[static_cast<std::size_t>(s - lowest_score())];
}

void ScoreDistribution::set(Ending ending, int s, BigCount value) {
  if (!in_window(s))
    throw std::out_of_range("score " + std::to_string(s) + " outside the range for n = " +
                            std::to_string(n_));
  row(ending)[static_cast<std::size_t>(s - lowest_score())] = std::move(value);
}

void ScoreDistribution::add(Ending ending, int s, const BigCount& value) {
  if (!in_window(s))
    throw std::out_of_range("score " + std::to_string(s) + " outside the range for n = " +
                            std::to_string(n_));
  row(ending)[static_cast<std::size_t>(s - lowest_score())] += value;
}

BigCount ScoreDistribution::total(Ending ending) const {
  BigCount sum = 0;
  for (const auto& c : row(ending)) sum += c;
  return sum;
}

BigCount ScoreDistribution::alice_wins() const {
  BigCount sum = 0;
  for (int s = 1; s <= highest_score(); ++s) sum += heady(s) + taily(s);
  return sum;
}

BigCount ScoreDistribution::bob_wins() const {
  BigCount sum = 0;
  for (int s = lowest_score(); s < 0; ++s) sum += heady(s) + taily(s);
  return sum;
}

BigCount ScoreDistribution::ties() const { return heady(0) + taily(0); }

CloseCallTable bucket(const ScoreDistribution& distribution) {
  CloseCallTable table;
  const auto column = [](int s) { return s > 1 ? 0 : (s == 1 ? 1 : (s == 0 ? 2 : (s == -1 ? 3 : 4))); };
  for (int s = distribution.lowest_score(); s <= distribution.highest_score(); ++s) {
    table.heady[column(s)] += distribution.heady(s);
    table.taily[column(s)] += distribution.taily(s);
  }
  return table;
}

}  // namespace streakcount
