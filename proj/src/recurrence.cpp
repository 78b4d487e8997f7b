#include "streakcount/recurrence.hpp"

#include <algorithm>
#include <string>

namespace streakcount {

ScoreDistribution dp_initial() {
  ScoreDistribution table(1);
  table.set(Ending::heady, 0, 1);
  table.set(Ending::taily, 0, 1);
  return table;
}

ScoreDistribution dp_extend(const ScoreDistribution& table) {
  ScoreDistribution next(table.length() + 1);
  for (int s = next.lowest_score(); s <= next.highest_score(); ++s) {
    next.set(Ending::taily, s, table.taily(s) + table.heady(s + 1));
    next.set(Ending::heady, s, table.heady(s - 1) + table.taily(s));
  }
  return next;
}

ScoreDistribution dp_distribution(int n) {
  if (n < 1) throw std::invalid_argument("sequence length must be at least 1");
  ScoreDistribution table = dp_initial();
  while (table.length() < n) table = dp_extend(table);
  return table;
}

namespace {

int first_k_for(int s, Ending ending) {
  return ending == Ending::heady ? std::max(0, -s) : std::max(1, -s);
}

// quotient of value / divisor, which must be exact
BigCount exact_divide(const BigCount& value, const BigCount& divisor, const TermVector& where) {
  BigCount quotient;
  BigCount remainder;
  boost::multiprecision::divide_qr(value, divisor, quotient, remainder);
  if (remainder != 0)
    throw InexactDivision("inexact division in " + std::string(to_string(where.ending())) + " term update for s = " +
                          std::to_string(where.score()) + " at n = " + std::to_string(where.length()));
  return quotient;
}

}  // namespace

TermVector::TermVector(int s, Ending ending) : s_(s), ending_(ending), first_k_(first_k_for(s, ending)) {}

int TermVector::first_length(int s, Ending ending) {
  const int k0 = first_k_for(s, ending);
  return ending == Ending::heady ? 3 * k0 + s + 1 : 3 * k0 + s;
}

TermVector TermVector::start(int s, Ending ending) {
  TermVector tv(s, ending);
  tv.n_ = first_length(s, ending);
  // At the first length the only k is first_k and both binomials equal 1.
  tv.terms_.assign(1, BigCount(1));
  tv.frontier_ = 1;
  return tv;
}

long long TermVector::shifted_length() const {
  return ending_ == Ending::heady ? static_cast<long long>(n_) - s_ - 1 : static_cast<long long>(n_) - s_;
}

BigCount TermVector::sum() const {
  BigCount total = 0;
  for (const auto& t : terms_) total += t;
  return total;
}

void TermVector::extend() {
  const long long shifted = shifted_length();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const long long k = first_k_ + static_cast<long long>(i);
    if (k == 0) continue;
    const long long denominator = shifted + 1 - 3 * k;
    terms_[i] += exact_divide(terms_[i] * k, denominator, *this);
    ++divisions_;
  }

  const long long upper = shifted / 3;
  if ((shifted + 1) / 3 > upper) {
    const long long l = upper;
    const long long s = s_;
    if (ending_ == Ending::heady) {
      frontier_ = exact_divide(frontier_ * ((2 * l + s + 2) * (2 * l + s + 1)), BigCount((l + 1) * (l + s + 1)), *this);
    } else {
      frontier_ = exact_divide(frontier_ * ((2 * l + s + 1) * (2 * l + s)), BigCount(l * (l + s + 1)), *this);
    }
    ++divisions_;
    terms_.push_back(frontier_);
  }
  ++n_;
}

IncrementalSweep::IncrementalSweep(SweepMode mode, std::optional<ScoreWindow> window)
    : mode_(mode), window_(window) {}

bool IncrementalSweep::tracks(Ending ending) const {
  return mode_ == SweepMode::both || (ending == Ending::heady) == (mode_ == SweepMode::heady);
}

void IncrementalSweep::step(std::map<int, TermVector>& vectors, Ending ending) {
  for (auto& [s, tv] : vectors) {
    tv.extend();
    if (hook_) hook_(tv);
  }
  for (int s = min_score(n_); s <= max_score(n_); ++s) {
    if (window_ && !window_->contains(s)) continue;
    if (TermVector::first_length(s, ending) != n_ || vectors.contains(s)) continue;
    const auto [it, inserted] = vectors.emplace(s, TermVector::start(s, ending));
    if (hook_) hook_(it->second);
  }
}

void IncrementalSweep::advance() {
  ++n_;
  if (tracks(Ending::heady)) step(heady_, Ending::heady);
  if (tracks(Ending::taily)) step(taily_, Ending::taily);
}

BigCount IncrementalSweep::heady(int s) const {
  const auto it = heady_.find(s);
  return it == heady_.end() ? BigCount(0) : it->second.sum();
}

BigCount IncrementalSweep::taily(int s) const {
  BigCount total = 0;
  // the all-tails sequence sits outside the term vectors
  if (s == 0 && n_ >= 1 && tracks(Ending::taily) && (!window_ || window_->contains(0))) total = 1;
  const auto it = taily_.find(s);
  if (it != taily_.end()) total += it->second.sum();
  return total;
}

ScoreDistribution IncrementalSweep::distribution() const {
  if (n_ < 1) throw std::logic_error("advance() the sweep before reading a distribution");
  ScoreDistribution table(n_);
  for (int s = table.lowest_score(); s <= table.highest_score(); ++s) {
    table.set(Ending::heady, s, heady(s));
    table.set(Ending::taily, s, taily(s));
  }
  return table;
}

std::uint64_t IncrementalSweep::divisions() const {
  std::uint64_t total = 0;
  for (const auto& [s, tv] : heady_) total += tv.divisions();
  for (const auto& [s, tv] : taily_) total += tv.divisions();
  return total;
}

void table_sweep(int n_max, SweepMode mode, const std::function<void(const ScoreDistribution&)>& visit) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  IncrementalSweep sweep(mode);
  for (int n = 1; n <= n_max; ++n) {
    sweep.advance();
    visit(sweep.distribution());
  }
}

ScoreDistribution incremental_distribution(int n) {
  if (n < 1) throw std::invalid_argument("sequence length must be at least 1");
  IncrementalSweep sweep;
  while (sweep.length() < n) sweep.advance();
  return sweep.distribution();
}

}  // namespace streakcount
