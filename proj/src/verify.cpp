#include "streakcount/verify.hpp"

#include "streakcount/counting.hpp"
#include "streakcount/oracle.hpp"
#include "streakcount/recurrence.hpp"
#include "streakcount/signatures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace streakcount::verify {

namespace {

class Suite {
public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  SuiteResult finish() { return std::move(result_); }

private:
  SuiteResult result_;
};

std::string str(const BigCount& v) { return v.str(); }

// Closed-form counts, optionally with one injected off-by-one.
class Counts {
public:
  explicit Counts(std::optional<Fault> fault) : fault_(fault) {}

  BigCount heady(int s, int n) const { return heady_count(s, n) + bump(Ending::heady, s, n); }
  BigCount taily(int s, int n) const { return taily_count(s, n) + bump(Ending::taily, s, n); }

  ScoreDistribution distribution(int n) const {
    ScoreDistribution table(n);
    for (int s = table.lowest_score(); s <= table.highest_score(); ++s) {
      table.set(Ending::heady, s, heady(s, n));
      table.set(Ending::taily, s, taily(s, n));
    }
    return table;
  }

  BigCount gap(int n) const { return distribution(n).win_gap(); }

private:
  int bump(Ending ending, int s, int n) const {
    return fault_ && fault_->ending == ending && fault_->s == s && fault_->n == n ? 1 : 0;
  }

  std::optional<Fault> fault_;
};

std::string describe_row(const std::array<BigCount, 5>& row) {
  std::ostringstream out;
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
  return out.str();
}

SuiteResult base_tables(const Counts& counts, const Options& options) {
  Suite suite("base tables (n = 2, 3)");
  const std::map<int, CloseCallTable> expected = {
      {2, CloseCallTable{{0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}}},
      {3, CloseCallTable{{1, 1, 1, 1, 0}, {0, 0, 2, 2, 0}}},
  };
  for (const auto& [n, table] : expected) {
    const auto closed = bucket(counts.distribution(n));
    suite.check(closed == table, [&] {
      return "closed form n = " + std::to_string(n) + " heady row " + describe_row(closed.heady) + ", taily row " +
             describe_row(closed.taily);
    });
    if (n <= options.oracle_max) {
      const auto enumerated = oracle::close_call_table(n, {options.oracle_cap});
      suite.check(enumerated == table, [&] {
        return "enumeration n = " + std::to_string(n) + " heady row " + describe_row(enumerated.heady);
      });
    }
  }
  const BigCount d2 = counts.gap(2);
  const BigCount d3 = counts.gap(3);
  suite.check(d2 == 0, [&] { return "D_2 = " + str(d2) + ", expected 0"; });
  suite.check(d3 == 1, [&] { return "D_3 = " + str(d3) + ", expected 1"; });
  return suite.finish();
}

SuiteResult oracle_equivalence(const Counts& counts, const Options& options) {
  Suite suite("closed form vs exhaustive enumeration");
  for (int n = 1; n <= options.oracle_max; ++n) {
    const auto enumerated = oracle::enumerate_distribution(n, {options.oracle_cap});
    const auto closed = counts.distribution(n);
    for (int s = enumerated.lowest_score(); s <= enumerated.highest_score(); ++s) {
      for (const Ending e : {Ending::heady, Ending::taily}) {
        suite.check(closed.at(e, s) == enumerated.at(e, s), [&] {
          return std::string(to_string(e)) + " s = " + std::to_string(s) + ", n = " + std::to_string(n) +
                 ": closed " + str(closed.at(e, s)) + " vs enumerated " + str(enumerated.at(e, s));
        });
      }
    }
  }
  return suite.finish();
}

SuiteResult three_way(const Counts& counts, const Options& options) {
  Suite suite("closed form vs DP vs incremental");
  IncrementalSweep sweep;
  ScoreDistribution dp = dp_initial();
  try {
    for (int n = 1; n <= options.max_n; ++n) {
      if (n > 1) dp = dp_extend(dp);
      sweep.advance();
      const auto incremental = sweep.distribution();
      const auto closed = counts.distribution(n);
      suite.check(closed == dp, [&] { return "closed form and DP differ at n = " + std::to_string(n); });
      suite.check(closed == incremental,
                  [&] { return "closed form and incremental differ at n = " + std::to_string(n); });
    }
  } catch (const InexactDivision& e) {
    suite.check(false, [&] { return std::string(e.what()); });
  }
  return suite.finish();
}

SuiteResult normalization(const Counts& counts, const Options& options) {
  Suite suite("normalization");
  for (int n = 1; n <= options.max_n; ++n) {
    const auto table = counts.distribution(n);
    const BigCount half = power_of_two(n - 1);
    for (const Ending e : {Ending::heady, Ending::taily}) {
      const BigCount total = table.total(e);
      suite.check(total == half, [&] {
        return std::string(to_string(e)) + " total at n = " + std::to_string(n) + " is " + str(total);
      });
    }
  }
  return suite.finish();
}

SuiteResult range_emptiness(const Counts& counts, const Options& options) {
  Suite suite("range emptiness");
  for (int n = 1; n <= options.max_n; ++n) {
    const int heady_lo = -((n - 1) / 2);
    const int heady_hi = n - 1;
    const int taily_lo = -(n / 2);
    const int taily_hi = std::max(0, n - 3);
    for (int s = heady_lo - 2; s <= heady_hi + 2; ++s) {
      const bool inside = s >= heady_lo && s <= heady_hi;
      const BigCount c = counts.heady(s, n);
      suite.check(inside == (c > 0), [&] {
        return "heady s = " + std::to_string(s) + ", n = " + std::to_string(n) + " gives " + str(c);
      });
    }
    for (int s = taily_lo - 2; s <= taily_hi + 2; ++s) {
      const bool inside = s >= taily_lo && s <= taily_hi;
      const BigCount c = counts.taily(s, n);
      suite.check(inside == (c > 0), [&] {
        return "taily s = " + std::to_string(s) + ", n = " + std::to_string(n) + " gives " + str(c);
      });
    }
  }
  return suite.finish();
}

SuiteResult gap_identities(const Counts& counts, const Options& options) {
  Suite suite("win-gap identities");
  std::vector<BigCount> gap(static_cast<std::size_t>(options.max_n + 2));
  for (int n = 2; n <= options.max_n; ++n) gap[static_cast<std::size_t>(n)] = counts.gap(n);
  const auto D = [&](int n) -> const BigCount& { return gap[static_cast<std::size_t>(n)]; };

  for (int n = 2; n <= options.max_n; ++n) {
    const BigCount h4 = counts.heady(-1, n);
    suite.check(D(n) == h4, [&] { return "D_" + std::to_string(n) + " = " + str(D(n)) + " but h4 = " + str(h4); });
    if (n >= 3) {
      const BigCount h2 = counts.heady(1, n - 1);
      suite.check(D(n) - D(n - 1) == h2, [&] {
        return "D_" + std::to_string(n) + " - D_" + std::to_string(n - 1) + " != h2(" + std::to_string(n - 1) + ")";
      });
    }
    if (n + 1 <= options.max_n) {
      const BigCount rhs = D(n) - (counts.heady(-1, n) - counts.heady(1, n));
      suite.check(D(n + 1) - D(n) == rhs, [&] { return "increment identity fails at n = " + std::to_string(n); });
    }
  }
  BigCount running = 0;
  for (int n = 3; n <= options.max_n; ++n) {
    running += counts.heady(1, n - 1);
    suite.check(running == counts.heady(-1, n),
                [&] { return "h4(" + std::to_string(n) + ") is not the sum of earlier h2"; });
  }
  return suite.finish();
}

SuiteResult close_call_recurrence(const Counts& counts, const Options& options) {
  Suite suite("h4(n+1) = h2(n) + h4(n)");
  for (int n = 2; n + 1 <= options.max_n; ++n) {
    const BigCount lhs = counts.heady(-1, n + 1);
    const BigCount rhs = counts.heady(1, n) + counts.heady(-1, n);
    suite.check(lhs == rhs,
                [&] { return "n = " + std::to_string(n) + ": " + str(lhs) + " != " + str(rhs); });
  }
  return suite.finish();
}

SuiteResult taily_recurrence(const Counts& counts, const Options& options) {
  Suite suite("T_s(n) = T_s(n-1) + H_{s+1}(n-1)");
  for (int n = 2; n <= options.max_n; ++n) {
    for (int s = -(n / 2); s <= std::max(0, n - 3); ++s) {
      const BigCount lhs = counts.taily(s, n);
      const BigCount rhs = counts.taily(s, n - 1) + counts.heady(s + 1, n - 1);
      suite.check(lhs == rhs, [&] {
        return "s = " + std::to_string(s) + ", n = " + std::to_string(n) + ": " + str(lhs) + " != " + str(rhs);
      });
    }
  }
  return suite.finish();
}

SuiteResult corollary(const Counts& counts, const Options& options) {
  Suite suite("h2 signature sum");
  for (int n = 2; n <= options.max_n; ++n) {
    const BigCount direct = close_call_alice(n);
    const BigCount general = counts.heady(1, n);
    suite.check(direct == general, [&] {
      return "n = " + std::to_string(n) + ": " + str(direct) + " vs H_1 = " + str(general);
    });
  }
  return suite.finish();
}

SuiteResult positivity(const Counts& counts, const Options& options) {
  Suite suite("positivity");
  for (int n = 2; n <= options.max_n; ++n) {
    suite.check(counts.heady(1, n) >= 1, [&] { return "h2(" + std::to_string(n) + ") < 1"; });
    if (n >= 3) suite.check(counts.gap(n) >= 1, [&] { return "D_" + std::to_string(n) + " < 1"; });
  }
  return suite.finish();
}

SuiteResult minimal_lengths(int max_marks) {
  Suite suite("minimum length depends only on mark counts");
  std::map<std::tuple<int, int, Ending>, int> seen;
  for (int len = 1; len <= max_marks; ++len) {
    for (std::uint32_t index = 0; index < (1U << len); ++index) {
      const Signature sigma = Signature::from_bits(index, len);
      for (const Ending e : {Ending::heady, Ending::taily}) {
        if (e == Ending::taily && sigma.marks().back() != Mark::minus) continue;
        const int lambda = lambda_of(sigma, e);
        const auto mu = min_length_sequence(sigma, e);
        suite.check(mu.lambda == lambda && static_cast<int>(mu.sequence.size()) == lambda,
                    [&] { return "'" + sigma.to_string() + "' " + std::string(to_string(e)) + " length mismatch"; });
        suite.check(signature_of(mu.sequence) == sigma && mu.sequence.ending() == e,
                    [&] { return "minimal sequence for '" + sigma.to_string() + "' does not realize it"; });
        const auto key = std::make_tuple(sigma.plus_count(), sigma.minus_count(), e);
        const auto [it, inserted] = seen.emplace(key, lambda);
        suite.check(it->second == lambda, [&] { return "'" + sigma.to_string() + "' breaks permutation invariance"; });
      }
    }
  }
  return suite.finish();
}

SuiteResult generator_exhaustive(const Options& options) {
  Suite suite("generated sequences match enumeration");
  const int limit = std::min(options.oracle_max, 14);
  for (int n = 1; n <= limit; ++n) {
    std::map<std::pair<int, Ending>, std::vector<std::uint64_t>> generated;
    // the null signature: heady "0..01"; taily all-tails is the standalone term
    const auto null_plan = GenerationPlan(Signature(), n, Ending::heady, false);
    null_plan.for_each([&](const TossSequence& x, std::span<const unsigned>) {
      generated[{0, Ending::heady}].push_back(x.packed());
    });
    generated[{0, Ending::taily}].push_back(0);
    for (int len = 1; len <= n - 1; ++len) {
      for (std::uint32_t index = 0; index < (1U << len); ++index) {
        const Signature sigma = Signature::from_bits(index, len);
        for (const Ending e : {Ending::heady, Ending::taily}) {
          if (e == Ending::taily && sigma.marks().back() != Mark::minus) continue;
          if (lambda_of(sigma, e) > n) continue;
          GenerationPlan(sigma, n, e, false).for_each([&](const TossSequence& x, std::span<const unsigned>) {
            generated[{sigma.score(), e}].push_back(x.packed());
          });
        }
      }
    }
    for (int s = min_score(n); s <= max_score(n); ++s) {
      for (const Ending e : {Ending::heady, Ending::taily}) {
        auto& got = generated[{s, e}];
        std::sort(got.begin(), got.end());
        const bool unique = std::adjacent_find(got.begin(), got.end()) == got.end();
        std::vector<std::uint64_t> want;
        for (const auto& x : oracle::sequences_with(n, s, e, {options.oracle_cap})) want.push_back(x.packed());
        suite.check(unique, [&] { return "duplicate sequence for s = " + std::to_string(s) + ", n = " + std::to_string(n); });
        suite.check(got == want, [&] {
          return std::string(to_string(e)) + " s = " + std::to_string(s) + ", n = " + std::to_string(n) + ": generated " +
                 std::to_string(got.size()) + " vs enumerated " + std::to_string(want.size());
        });
      }
    }
  }
  return suite.finish();
}

SuiteResult complement_bijection(int max_marks, int extra) {
  Suite suite("complement bijection for close calls");
  for (int len = 1; len <= max_marks; len += 2) {
    for (std::uint32_t index = 0; index < (1U << len); ++index) {
      const Signature sigma = Signature::from_bits(index, len);
      if (sigma.score() != 1) continue;
      const Signature flipped = complement(sigma);
      const int lambda = lambda_of(sigma, Ending::heady);
      suite.check(lambda_of(flipped, Ending::heady) == lambda + 1,
                  [&] { return "'" + flipped.to_string() + "' is not one toss longer"; });
      for (int n = lambda; n <= lambda + extra; ++n) {
        const auto alice = generate_sequences(sigma, n, Ending::heady, false);
        const auto bob = generate_sequences(flipped, n + 1, Ending::heady, true);
        suite.check(alice.size() == bob.size(), [&] {
          return "'" + sigma.to_string() + "' n = " + std::to_string(n) + ": " + std::to_string(alice.size()) +
                 " vs " + std::to_string(bob.size());
        });
        const bool shaped = std::all_of(bob.begin(), bob.end(), [](const TossSequence& x) {
          return x.front() == 1 && x.back() == 1 && score(x) == -1;
        });
        suite.check(shaped, [&] { return "'" + flipped.to_string() + "' produced a non close-call sequence"; });
      }
    }
  }
  return suite.finish();
}

}  // namespace

std::vector<SuiteResult> run_all(const Options& options) {
  if (options.oracle_max > options.oracle_cap) throw oracle::CapExceeded(options.oracle_max, options.oracle_cap);
  const Counts counts(options.fault);
  std::vector<SuiteResult> results;
  results.push_back(base_tables(counts, options));
  results.push_back(oracle_equivalence(counts, options));
  results.push_back(three_way(counts, options));
  results.push_back(normalization(counts, options));
  results.push_back(range_emptiness(counts, options));
  results.push_back(gap_identities(counts, options));
  results.push_back(close_call_recurrence(counts, options));
  results.push_back(taily_recurrence(counts, options));
  results.push_back(corollary(counts, options));
  results.push_back(positivity(counts, options));
  results.push_back(minimal_lengths(10));
  results.push_back(generator_exhaustive(options));
  results.push_back(complement_bijection(9, 4));
  return results;
}

}  // namespace streakcount::verify
