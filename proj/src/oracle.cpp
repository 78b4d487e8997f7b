#include "streakcount/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

namespace streakcount::oracle {

namespace {

// Per-range tallies indexed by score - min_score(n); [0] heady, [1] taily.
struct Tally {
  explicit Tally(int n) : width(static_cast<std::size_t>(max_score(n) - min_score(n) + 1)) {
    counts[0].assign(width, 0);
    counts[1].assign(width, 0);
  }
  std::size_t width;
  std::vector<std::uint64_t> counts[2];
};

void tally_range(int n, std::uint64_t first, std::uint64_t last, Tally& tally) {
  const std::uint64_t last_bit = 1ULL << (n - 1);
  const int offset = -min_score(n);
  for (std::uint64_t word = first; word < last; ++word) {
    const int s = packed_score(word, n);
    const int side = (word & last_bit) ? 0 : 1;
    ++tally.counts[side][static_cast<std::size_t>(s + offset)];
  }
}

void check_request(int n, const Options& options) {
  if (n < 1) throw std::invalid_argument("sequence length must be at least 1");
  if (n > options.cap) throw CapExceeded(n, options.cap);
  if (n > packed_limit)
    throw std::invalid_argument("exhaustive enumeration is limited to n <= " + std::to_string(packed_limit));
}

}  // namespace

CapExceeded::CapExceeded(int n, int cap)
    : std::runtime_error("n = " + std::to_string(n) + " exceeds the exhaustive-enumeration cap of " +
                         std::to_string(cap) + "; raise it with " + cap_flag + " or " + cap_env_var),
      n_(n),
      cap_(cap) {}

int cap_from_environment() {
  const char* raw = std::getenv(cap_env_var);
  if (raw == nullptr || *raw == '\0') return default_cap;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < 1 || value > packed_limit)
    throw std::invalid_argument(std::string(cap_env_var) + " must be an integer in 1.." +
                                std::to_string(packed_limit));
  return static_cast<int>(value);
}

ScoreDistribution enumerate_distribution(int n, const Options& options) {
  check_request(n, options);

  const std::uint64_t count = 1ULL << n;
  unsigned parts = options.partitions;
  if (parts == 0) parts = n < 16 ? 1 : std::max(1U, std::thread::hardware_concurrency());
  parts = static_cast<unsigned>(std::min<std::uint64_t>(parts, count));

  std::vector<Tally> tallies(parts, Tally(n));
  if (parts == 1) {
    tally_range(n, 0, count, tallies[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(parts);
    for (unsigned p = 0; p < parts; ++p) {
      const std::uint64_t first = count / parts * p;
      const std::uint64_t last = p + 1 == parts ? count : count / parts * (p + 1);
      workers.emplace_back(tally_range, n, first, last, std::ref(tallies[p]));
    }
    for (auto& w : workers) w.join();
  }

  ScoreDistribution result(n);
  for (int s = min_score(n); s <= max_score(n); ++s) {
    const auto index = static_cast<std::size_t>(s - min_score(n));
    std::uint64_t heady = 0;
    std::uint64_t taily = 0;
    for (const auto& t : tallies) {
      heady += t.counts[0][index];
      taily += t.counts[1][index];
    }
    result.set(Ending::heady, s, heady);
    result.set(Ending::taily, s, taily);
  }
  return result;
}

CloseCallTable close_call_table(int n, const Options& options) {
  return bucket(enumerate_distribution(n, options));
}

BigCount win_gap(int n, const Options& options) { return enumerate_distribution(n, options).win_gap(); }

std::vector<TossSequence> sequences_with(int n, int s, Ending ending, const Options& options) {
  check_request(n, options);
  const std::uint64_t last_bit = 1ULL << (n - 1);
  const bool want_heady = ending == Ending::heady;
  std::vector<TossSequence> found;
  for (std::uint64_t word = 0; word < (1ULL << n); ++word) {
    if (((word & last_bit) != 0) != want_heady) continue;
    if (packed_score(word, n) == s) found.push_back(TossSequence::from_packed(word, n));
  }
  return found;
}

}  // namespace streakcount::oracle
