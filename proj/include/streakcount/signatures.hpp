#pragma once

#include "streakcount/core.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace streakcount {

enum class Mark : std::uint8_t { plus, minus };

/**
 * Left-to-right record of a sequence's scoring pairs: '+' for each 1,1 and
 * '-' for each 1,0. Pairs starting with a 0 leave no mark. The empty
 * signature is the null signature.
 */
class Signature {
public:
  Signature() = default;
  explicit Signature(std::vector<Mark> marks) : marks_(std::move(marks)) {}

  /// '+' and '-' characters; "" is null. Throws std::invalid_argument otherwise.
  static Signature parse(std::string_view text);

  /// The i-th signature of `length` marks, bit j of `index` set = minus at j.
  static Signature from_bits(std::uint32_t index, int length);

  const std::vector<Mark>& marks() const { return marks_; }
  std::size_t size() const { return marks_.size(); }
  bool is_null() const { return marks_.empty(); }

  int plus_count() const;
  int minus_count() const;
  int score() const { return plus_count() - minus_count(); }

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

private:
  std::vector<Mark> marks_;
};

Signature signature_of(const TossSequence& tosses);

/// Swaps every plus with a minus and vice versa.
Signature complement(const Signature& signature);

/// Raised when a signature cannot be realized as requested.
class InfeasibleSignature : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct MinLengthSeq {
  TossSequence sequence;
  Ending ending;
  int lambda;
};

/**
 * Shortest sequence with signature `signature` and the given last toss.
 *
 * A run of j pluses becomes j+1 ones, a minus closes the current run with a
 * 0 (opening a fresh "1,0" when no run is open). Heady sequences get a final
 * 1 when the signature ends in a minus. The null signature is heady-only and
 * yields the single toss "1". Taily requires a signature ending in minus;
 * anything else throws InfeasibleSignature.
 */
MinLengthSeq min_length_sequence(const Signature& signature, Ending ending);

/// Length of min_length_sequence() from the mark counts alone:
/// 3q + s + 1 (heady) or 3q + s (taily), q minus marks, s = plus - minus.
int lambda_of(const Signature& signature, Ending ending);

/// Weak compositions of `total` into `bins` ordered parts, emitted in
/// decreasing lexicographic order: (3,0), (2,1), (1,2), (0,3).
class Compositions {
public:
  /// Throws std::invalid_argument if bins == 0.
  Compositions(unsigned total, unsigned bins);

  class iterator {
  public:
    using value_type = std::vector<unsigned>;
    using difference_type = std::ptrdiff_t;
    using reference = const value_type&;
    using pointer = const value_type*;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    reference operator*() const { return parts_; }
    pointer operator->() const { return &parts_; }
    iterator& operator++();
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

  private:
    friend class Compositions;
    explicit iterator(std::vector<unsigned> first) : parts_(std::move(first)), done_(false) {}

    std::vector<unsigned> parts_;
    bool done_ = true;
  };

  iterator begin() const;
  iterator end() const { return {}; }

  unsigned total() const { return total_; }
  unsigned bins() const { return bins_; }

private:
  unsigned total_;
  unsigned bins_;
};

/**
 * Zero-insertion plan for every length-n sequence with a fixed signature and
 * ending. Surplus zeros go in front of the first 1 of each run of ones in the
 * minimum-length sequence, plus (taily only) at the very end. With
 * fixed_leading_one the slot in front of the first run is withheld, so every
 * sequence starts with 1.
 */
class GenerationPlan {
public:
  /// Throws InfeasibleSignature if n < lambda (the message names the
  /// minimal length), for a null signature in taily mode, or when
  /// fixed_leading_one leaves no slot for a positive surplus.
  GenerationPlan(const Signature& signature, int n, Ending ending, bool fixed_leading_one);

  const MinLengthSeq& minimal() const { return minimal_; }
  int length() const { return n_; }
  unsigned surplus() const { return surplus_; }
  std::size_t slot_count() const { return slots_.size(); }
  /// Positions in minimal().sequence (0-based) that receive zeros in front.
  /// A position equal to lambda is the taily end slot.
  const std::vector<int>& slots() const { return slots_; }

  Compositions compositions() const;

  /// Number of sequences the plan yields, C(surplus + slots - 1, slots - 1).
  std::uint64_t size() const;

  /// Sequence obtained by inserting parts[i] zeros at slot i.
  /// Throws std::invalid_argument if the parts do not fit the plan.
  TossSequence build(std::span<const unsigned> parts) const;

  /// Calls `visit` once per sequence, in composition order.
  void for_each(const std::function<void(const TossSequence&, std::span<const unsigned>)>& visit) const;

private:
  MinLengthSeq minimal_;
  int n_;
  unsigned surplus_ = 0;
  std::vector<int> slots_;
};

/// All sequences of the plan, in composition order.
std::vector<TossSequence> generate_sequences(const Signature& signature, int n, Ending ending,
                                             bool fixed_leading_one = false);

}  // namespace streakcount
