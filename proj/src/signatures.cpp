#include "streakcount/signatures.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace streakcount {

Signature Signature::parse(std::string_view text) {
  std::vector<Mark> marks;
  marks.reserve(text.size());
  for (const char c : text) {
    if (c == '+') {
      marks.push_back(Mark::plus);
    } else if (c == '-') {
      marks.push_back(Mark::minus);
    } else {
      throw std::invalid_argument("signature '" + std::string(text) + "' may only contain '+' and '-'");
    }
  }
  return Signature(std::move(marks));
}

Signature Signature::from_bits(std::uint32_t index, int length) {
  std::vector<Mark> marks(static_cast<std::size_t>(length));
  for (int j = 0; j < length; ++j) marks[static_cast<std::size_t>(j)] = ((index >> j) & 1U) ? Mark::minus : Mark::plus;
  return Signature(std::move(marks));
}

int Signature::plus_count() const {
  return static_cast<int>(std::count(marks_.begin(), marks_.end(), Mark::plus));
}

int Signature::minus_count() const {
  return static_cast<int>(std::count(marks_.begin(), marks_.end(), Mark::minus));
}

std::string Signature::to_string() const {
  std::string text;
  text.reserve(marks_.size());
  for (const Mark m : marks_) text.push_back(m == Mark::plus ? '+' : '-');
  return text;
}

Signature signature_of(const TossSequence& tosses) {
  std::vector<Mark> marks;
  for (std::size_t i = 0; i + 1 < tosses.size(); ++i) {
    if (!tosses[i]) continue;
    marks.push_back(tosses[i + 1] ? Mark::plus : Mark::minus);
  }
  return Signature(std::move(marks));
}

Signature complement(const Signature& signature) {
  std::vector<Mark> marks = signature.marks();
  for (Mark& m : marks) m = m == Mark::plus ? Mark::minus : Mark::plus;
  return Signature(std::move(marks));
}

namespace {

void require_realizable(const Signature& signature, Ending ending) {
  if (ending != Ending::taily) return;
  if (signature.is_null())
    throw InfeasibleSignature("the null signature has no taily realization besides all tails");
  if (signature.marks().back() != Mark::minus)
    throw InfeasibleSignature("taily sequences need a signature ending in '-', got '" + signature.to_string() + "'");
}

}  // namespace

MinLengthSeq min_length_sequence(const Signature& signature, Ending ending) {
  require_realizable(signature, ending);

  std::vector<std::uint8_t> bits;
  bits.reserve(2 * signature.size() + 2);
  for (const Mark m : signature.marks()) {
    const bool run_open = !bits.empty() && bits.back() == 1;
    if (!run_open) bits.push_back(1);
    bits.push_back(m == Mark::plus ? 1 : 0);
  }
  if (ending == Ending::heady && (bits.empty() || bits.back() == 0)) bits.push_back(1);

  const int lambda = static_cast<int>(bits.size());
  return MinLengthSeq{TossSequence(std::move(bits)), ending, lambda};
}

int lambda_of(const Signature& signature, Ending ending) {
  require_realizable(signature, ending);
  const int q = signature.minus_count();
  const int s = signature.score();
  return ending == Ending::heady ? 3 * q + s + 1 : 3 * q + s;
}

Compositions::Compositions(unsigned total, unsigned bins) : total_(total), bins_(bins) {
  if (bins == 0 && total != 0) throw std::invalid_argument("cannot place a positive total into zero bins");
}

Compositions::iterator Compositions::begin() const {
  std::vector<unsigned> first(bins_, 0);
  if (bins_ > 0) first[0] = total_;
  return iterator(std::move(first));
}

Compositions::iterator& Compositions::iterator::operator++() {
  // Rightmost non-zero part short of the last one gives one unit to its
  // neighbour, which also absorbs everything to its right.
  const std::size_t b = parts_.size();
  if (b < 2) {
    done_ = true;
    return *this;
  }
  std::size_t i = b - 1;
  while (i > 0 && parts_[i - 1] == 0) --i;
  if (i == 0) {
    done_ = true;
    return *this;
  }
  --i;
  unsigned tail = 1;
  for (std::size_t j = i + 1; j < b; ++j) {
    tail += parts_[j];
    parts_[j] = 0;
  }
  --parts_[i];
  parts_[i + 1] = tail;
  return *this;
}

GenerationPlan::GenerationPlan(const Signature& signature, int n, Ending ending, bool fixed_leading_one)
    : minimal_(min_length_sequence(signature, ending)), n_(n) {
  if (n < minimal_.lambda)
    throw InfeasibleSignature("no " + std::string(to_string(ending)) + " sequence of length " + std::to_string(n) +
                              " has signature '" + signature.to_string() + "'; minimal length is " +
                              std::to_string(minimal_.lambda));
  surplus_ = static_cast<unsigned>(n - minimal_.lambda);

  const auto& mu = minimal_.sequence;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const bool run_start = mu[i] == 1 && (i == 0 || mu[i - 1] == 0);
    if (run_start) slots_.push_back(static_cast<int>(i));
  }
  if (ending == Ending::taily) slots_.push_back(minimal_.lambda);
  if (fixed_leading_one) slots_.erase(slots_.begin());

  if (slots_.empty() && surplus_ > 0)
    throw InfeasibleSignature("signature '" + signature.to_string() + "' with a fixed leading 1 admits only length " +
                              std::to_string(minimal_.lambda));
}

Compositions GenerationPlan::compositions() const {
  return Compositions(surplus_, static_cast<unsigned>(slots_.size()));
}

std::uint64_t GenerationPlan::size() const {
  if (slots_.empty()) return 1;
  // C(surplus + bins - 1, bins - 1), built up so every partial product is a binomial
  const std::uint64_t r = slots_.size() - 1;
  std::uint64_t value = 1;
  for (std::uint64_t i = 1; i <= r; ++i) value = value * (surplus_ + i) / i;
  return value;
}

TossSequence GenerationPlan::build(std::span<const unsigned> parts) const {
  if (parts.size() != slots_.size())
    throw std::invalid_argument("composition has " + std::to_string(parts.size()) + " parts, plan has " +
                                std::to_string(slots_.size()) + " slots");
  if (std::accumulate(parts.begin(), parts.end(), 0U) != surplus_)
    throw std::invalid_argument("composition does not sum to the surplus of " + std::to_string(surplus_));

  const auto& mu = minimal_.sequence;
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(n_));
  std::size_t next_slot = 0;
  for (std::size_t i = 0; i <= mu.size(); ++i) {
    if (next_slot < slots_.size() && slots_[next_slot] == static_cast<int>(i)) {
      bits.insert(bits.end(), parts[next_slot], 0);
      ++next_slot;
    }
    if (i < mu.size()) bits.push_back(mu[i]);
  }
  return TossSequence(std::move(bits));
}

void GenerationPlan::for_each(
    const std::function<void(const TossSequence&, std::span<const unsigned>)>& visit) const {
  for (const auto& parts : compositions()) visit(build(parts), parts);
}

std::vector<TossSequence> generate_sequences(const Signature& signature, int n, Ending ending,
                                             bool fixed_leading_one) {
  const GenerationPlan plan(signature, n, ending, fixed_leading_one);
  std::vector<TossSequence> out;
  out.reserve(plan.size());
  plan.for_each([&](const TossSequence& x, std::span<const unsigned>) { out.push_back(x); });
  return out;
}

}  // namespace streakcount
