#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace streakcount {

/// Whether a sequence ends in heads (heady) or tails (taily).
enum class Ending { heady, taily };

std::string_view to_string(Ending ending);
Ending parse_ending(std::string_view text);

enum class Outcome { alice_win, bob_win, tie };

std::string_view to_string(Outcome outcome);

/**
 * An ordered run of coin tosses, 1 = heads. Never empty.
 *
 * Text form is a string of '0'/'1' characters with the first toss first,
 * e.g. "01110". Documentation and CLI output number tosses from 1.
 */
class TossSequence {
public:
  /// Throws std::invalid_argument on an empty list or a value other than 0/1.
  explicit TossSequence(std::vector<std::uint8_t> bits);

  /// Throws std::invalid_argument on empty text or a character other than '0'/'1'.
  static TossSequence parse(std::string_view text);

  /// Unpacks bit (i-1) of `word` as toss i. Requires 1 <= length <= 64.
  static TossSequence from_packed(std::uint64_t word, int length);

  std::size_t size() const { return bits_.size(); }
  std::uint8_t operator[](std::size_t index) const { return bits_[index]; }
  std::uint8_t front() const { return bits_.front(); }
  std::uint8_t back() const { return bits_.back(); }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  Ending ending() const { return bits_.back() ? Ending::heady : Ending::taily; }

  /// Toss i stored in bit (i-1). Requires size() <= 64.
  std::uint64_t packed() const;

  std::string to_string() const;

  friend bool operator==(const TossSequence&, const TossSequence&) = default;
  friend auto operator<=>(const TossSequence&, const TossSequence&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// Alice's points (adjacent 1,1 pairs) minus Bob's points (adjacent 1,0 pairs).
int score(const TossSequence& tosses);

Outcome classify(const TossSequence& tosses);

constexpr Outcome outcome_of_score(long long s) {
  return s > 0 ? Outcome::alice_win : (s < 0 ? Outcome::bob_win : Outcome::tie);
}

/// Score of a packed sequence of `length` tosses (toss i in bit i-1).
/// Same result as score(TossSequence::from_packed(word, length)).
constexpr int packed_score(std::uint64_t word, int length) {
  if (length < 2) return 0;
  const std::uint64_t left_mask = (length - 1 >= 64) ? ~0ULL : ((1ULL << (length - 1)) - 1);
  const std::uint64_t left = word & left_mask;
  const std::uint64_t right = (word >> 1) & left_mask;
  return __builtin_popcountll(left & right) - __builtin_popcountll(left & ~right);
}

/// Supported score range for sequences of length n: -floor(n/2) .. n-1.
constexpr int min_score(int n) { return -(n / 2); }
constexpr int max_score(int n) { return n - 1; }

}  // namespace streakcount
