#include "streakcount/core.hpp"

#include <stdexcept>
#include <string>

namespace streakcount {

std::string_view to_string(Ending ending) {
  return ending == Ending::heady ? "heady" : "taily";
}

Ending parse_ending(std::string_view text) {
  if (text == "heady") return Ending::heady;
  if (text == "taily") return Ending::taily;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected heady or taily)");
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::alice_win: return "AliceWin";
    case Outcome::bob_win: return "BobWin";
    case Outcome::tie: return "Tie";
  }
  return "?";
}

TossSequence::TossSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("toss sequence must contain at least one toss");
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] > 1)
      throw std::invalid_argument("toss " + std::to_string(i + 1) + " is not 0 or 1");
  }
}

TossSequence TossSequence::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1')
      throw std::invalid_argument("toss " + std::to_string(i + 1) + " of '" + std::string(text) +
                                  "' is not '0' or '1'");
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return TossSequence(std::move(bits));
}

TossSequence TossSequence::from_packed(std::uint64_t word, int length) {
  if (length < 1 || length > 64) throw std::invalid_argument("packed length must be in 1..64");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) bits[static_cast<std::size_t>(i)] = (word >> i) & 1U;
  return TossSequence(std::move(bits));
}

std::uint64_t TossSequence::packed() const {
  if (bits_.size() > 64) throw std::length_error("sequence too long to pack into 64 bits");
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) word |= static_cast<std::uint64_t>(bits_[i]) << i;
  return word;
}

std::string TossSequence::to_string() const {
  std::string text(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) text[i] = '1';
  return text;
}

int score(const TossSequence& tosses) {
  int total = 0;
  for (std::size_t i = 0; i + 1 < tosses.size(); ++i) {
    if (!tosses[i]) continue;
    total += tosses[i + 1] ? 1 : -1;
  }
  return total;
}

Outcome classify(const TossSequence& tosses) { return outcome_of_score(score(tosses)); }

}  // namespace streakcount
