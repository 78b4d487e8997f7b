#include <doctest.h>

#include "streakcount/oracle.hpp"

#include <cstdlib>
#include <map>
#include <string>

using namespace streakcount;

namespace {

// Counts by (score, last toss) built by walking all strings recursively.
std::map<std::pair<int, char>, long long> reference_counts(int n) {
  std::map<std::pair<int, char>, long long> counts;
  std::string text;
  const auto walk = [&](auto&& self, int s) -> void {
    if (static_cast<int>(text.size()) == n) {
      ++counts[{s, text.back()}];
      return;
    }
    for (const char c : {'0', '1'}) {
      const int step = text.empty() || text.back() == '0' ? 0 : (c == '1' ? 1 : -1);
      text.push_back(c);
      self(self, s + step);
      text.pop_back();
    }
  };
  walk(walk, 0);
  return counts;
}

}  // namespace

TEST_CASE("small distributions") {
  const auto d1 = oracle::enumerate_distribution(1);
  CHECK(d1.heady(0) == 1);
  CHECK(d1.taily(0) == 1);

  const auto d2 = oracle::enumerate_distribution(2);
  CHECK(d2.heady(1) == 1);
  CHECK(d2.heady(0) == 1);
  CHECK(d2.taily(0) == 1);
  CHECK(d2.taily(-1) == 1);
  CHECK(d2.heady(-1) == 0);

  const auto d3 = oracle::enumerate_distribution(3);
  CHECK(d3.heady(2) == 1);
  CHECK(d3.heady(1) == 1);
  CHECK(d3.heady(0) == 1);
  CHECK(d3.heady(-1) == 1);
  CHECK(d3.taily(0) == 2);
  CHECK(d3.taily(-1) == 2);
  CHECK(d3.taily(1) == 0);
}

TEST_CASE("close-call tables") {
  CHECK(oracle::close_call_table(2) == CloseCallTable{{0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}});
  CHECK(oracle::close_call_table(3) == CloseCallTable{{1, 1, 1, 1, 0}, {0, 0, 2, 2, 0}});
  CHECK(oracle::close_call_table(8).heady[1] == 23);
}

TEST_CASE("win gap by enumeration") {
  CHECK(oracle::win_gap(2) == 0);
  CHECK(oracle::win_gap(3) == 1);
  CHECK(oracle::win_gap(10) == 93);
}

TEST_CASE("enumeration agrees with a recursive string walk") {
  for (int n = 1; n <= 12; ++n) {
    const auto reference = reference_counts(n);
    const auto d = oracle::enumerate_distribution(n);
    for (int s = -n; s <= n; ++s) {
      const auto ref = [&](char last) {
        const auto it = reference.find({s, last});
        return it == reference.end() ? 0LL : it->second;
      };
      CHECK(d.heady(s) == ref('1'));
      CHECK(d.taily(s) == ref('0'));
    }
  }
}

TEST_CASE("distribution invariants") {
  for (int n = 1; n <= 20; ++n) {
    const auto d = oracle::enumerate_distribution(n);
    CHECK(d.total(Ending::heady) == power_of_two(n - 1));
    CHECK(d.total(Ending::taily) == power_of_two(n - 1));
    for (int s = d.lowest_score(); s <= d.highest_score(); ++s) {
      if (s < -((n - 1) / 2) || s > n - 1) CHECK(d.heady(s) == 0);
      if (s < -(n / 2) || s > std::max(0, n - 3)) CHECK(d.taily(s) == 0);
    }
    const auto table = oracle::close_call_table(n);
    BigCount heady_sum = 0;
    for (const auto& c : table.heady) heady_sum += c;
    CHECK(heady_sum == power_of_two(n - 1));
  }
}

TEST_CASE("gap identities hold on enumerated tables") {
  for (int n = 2; n <= 19; ++n) {
    const auto now = oracle::enumerate_distribution(n);
    const auto next = oracle::enumerate_distribution(n + 1);
    const BigCount increment = next.win_gap() - now.win_gap();
    CHECK(increment == now.win_gap() - (now.heady(-1) - now.heady(1)));
    CHECK(now.win_gap() == now.heady(-1));
    CHECK(increment == now.heady(1));
  }
}

TEST_CASE("partitioned enumeration is identical to a single pass") {
  for (const int n : {5, 13, 18}) {
    const auto single = oracle::enumerate_distribution(n, {oracle::default_cap, 1});
    for (const unsigned parts : {2U, 3U, 7U, 64U}) {
      CHECK(oracle::enumerate_distribution(n, {oracle::default_cap, parts}) == single);
    }
  }
}

TEST_CASE("cap is enforced and named") {
  CHECK_THROWS_AS(oracle::enumerate_distribution(25), oracle::CapExceeded);
  CHECK_THROWS_AS(oracle::enumerate_distribution(0), std::invalid_argument);
  try {
    oracle::enumerate_distribution(12, {10});
    FAIL("expected CapExceeded");
  } catch (const oracle::CapExceeded& e) {
    const std::string message = e.what();
    CHECK(message.find("10") != std::string::npos);
    CHECK(message.find("--oracle-cap") != std::string::npos);
    CHECK(message.find("STREAKCOUNT_ORACLE_CAP") != std::string::npos);
    CHECK(e.cap() == 10);
    CHECK(e.requested() == 12);
  }
}

TEST_CASE("cap from the environment") {
  ::unsetenv(oracle::cap_env_var);
  CHECK(oracle::cap_from_environment() == oracle::default_cap);
  ::setenv(oracle::cap_env_var, "30", 1);
  CHECK(oracle::cap_from_environment() == 30);
  ::setenv(oracle::cap_env_var, "abc", 1);
  CHECK_THROWS_AS(oracle::cap_from_environment(), std::invalid_argument);
  ::unsetenv(oracle::cap_env_var);
}

TEST_CASE("sequence listing") {
  const auto b_close_calls = oracle::sequences_with(5, -1, Ending::heady);
  std::vector<std::string> texts;
  for (const auto& x : b_close_calls) texts.push_back(x.to_string());
  // by hand: heady, one 1,0 pair more than 1,1 pairs
  std::sort(texts.begin(), texts.end());
  CHECK(texts == std::vector<std::string>{"00101", "01001", "10001"});
  CHECK(oracle::sequences_with(3, 2, Ending::heady).front().to_string() == "111");
}
