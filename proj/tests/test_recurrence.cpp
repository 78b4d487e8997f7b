#include <doctest.h>

#include "streakcount/counting.hpp"
#include "streakcount/oracle.hpp"
#include "streakcount/recurrence.hpp"

using namespace streakcount;

TEST_CASE("dp from one toss to two") {
  const auto two = dp_extend(dp_initial());
  CHECK(two.heady(1) == 1);
  CHECK(two.heady(0) == 1);
  CHECK(two.taily(0) == 1);
  CHECK(two.taily(-1) == 1);
  CHECK(two.total() == 4);
}

TEST_CASE("dp reproduces the base tables and the reference h2 at 25") {
  const auto three = dp_distribution(3);
  CHECK(bucket(three) == CloseCallTable{{1, 1, 1, 1, 0}, {0, 0, 2, 2, 0}});
  CHECK(bucket(dp_distribution(2)) == CloseCallTable{{0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}});
  CHECK(dp_distribution(25).heady(1) == 1816610);
}

TEST_CASE("dp preserves normalization and matches enumeration") {
  ScoreDistribution table = dp_initial();
  for (int n = 1; n <= 20; ++n) {
    if (n > 1) table = dp_extend(table);
    CHECK(table.total() == power_of_two(n));
    CHECK(table == oracle::enumerate_distribution(n));
  }
}

TEST_CASE("heady term vector for s = 1 follows the reference column") {
  const std::vector<long> column = {1, 1, 1, 4, 7, 10, 23, 46, 79, 157, 315, 588, 1137, 2249, 4337, 8402,
                                    16495, 32179, 62707, 122916, 240837, 471456, 925061, 1816610};
  auto tv = TermVector::start(1, Ending::heady);
  CHECK(tv.length() == 2);
  for (std::size_t i = 0; i < column.size(); ++i) {
    REQUIRE(tv.length() == static_cast<int>(i) + 2);
    CHECK(tv.sum() == column[i]);
    tv.extend();
  }
}

TEST_CASE("heady term vector for s = -1") {
  auto tv = TermVector::start(-1, Ending::heady);
  CHECK(tv.length() == 3);
  while (tv.length() < 10) tv.extend();
  CHECK(tv.sum() == 93);
}

TEST_CASE("taily term vectors") {
  auto minus_one = TermVector::start(-1, Ending::taily);
  CHECK(minus_one.length() == 2);
  minus_one.extend();
  CHECK(minus_one.sum() == 2);

  IncrementalSweep sweep(SweepMode::taily);
  sweep.advance();
  sweep.advance();
  CHECK(sweep.taily(0) == 1);

  auto minus_two = TermVector::start(-2, Ending::taily);
  while (minus_two.length() < 6) minus_two.extend();
  CHECK(minus_two.sum() == taily_count(-2, 6));
  CHECK(minus_two.sum() == oracle::enumerate_distribution(6).taily(-2));
}

TEST_CASE("term vectors start at the closed-form value") {
  for (int s = -15; s <= 15; ++s) {
    for (const Ending e : {Ending::heady, Ending::taily}) {
      const auto tv = TermVector::start(s, e);
      const BigCount expected = e == Ending::heady ? heady_count(s, tv.length())
                                                   : taily_count(s, tv.length()) - (s == 0 ? 1 : 0);
      CHECK(tv.sum() == expected);
      CHECK(tv.terms().size() == 1);
      // one step earlier nothing is reachable
      if (tv.length() > 1) {
        const BigCount before = e == Ending::heady ? heady_count(s, tv.length() - 1)
                                                   : taily_count(s, tv.length() - 1) - (s == 0 ? 1 : 0);
        CHECK(before == 0);
      }
    }
  }
}

TEST_CASE("terms and frontier equal direct binomial products") {
  for (const Ending e : {Ending::heady, Ending::taily}) {
    for (int s = -8; s <= 8; ++s) {
      auto tv = TermVector::start(s, e);
      for (int step = 0; step < 90; ++step) {
        const long long shifted = e == Ending::heady ? tv.length() - s - 1 : tv.length() - s;
        REQUIRE(static_cast<long long>(tv.terms().size()) == shifted / 3 - tv.first_k() + 1);
        for (std::size_t i = 0; i < tv.terms().size(); ++i) {
          const long long k = tv.first_k() + static_cast<long long>(i);
          const BigCount direct = e == Ending::heady ? binomial(2 * k + s, k) * binomial(shifted - 2 * k, k)
                                                     : binomial(2 * k + s - 1, k - 1) * binomial(shifted - 2 * k, k);
          REQUIRE(tv.terms()[i] == direct);
        }
        const long long top = tv.first_k() + static_cast<long long>(tv.terms().size()) - 1;
        const BigCount pure = e == Ending::heady ? binomial(2 * top + s, top) : binomial(2 * top + s - 1, top - 1);
        REQUIRE(tv.frontier() == pure);
        tv.extend();
      }
    }
  }
}

TEST_CASE("incremental sweep equals closed form and dp") {
  IncrementalSweep sweep;
  ScoreDistribution dp = dp_initial();
  for (int n = 1; n <= 120; ++n) {
    if (n > 1) dp = dp_extend(dp);
    sweep.advance();
    const auto incremental = sweep.distribution();
    CHECK(incremental == closed_form_distribution(n));
    CHECK(incremental == dp);
    if (n <= 16) CHECK(incremental == oracle::enumerate_distribution(n));
  }
  CHECK(sweep.divisions() > 0);
}

TEST_CASE("table sweep modes") {
  std::vector<ScoreDistribution> both;
  table_sweep(3, SweepMode::both, [&](const ScoreDistribution& d) { both.push_back(d); });
  REQUIRE(both.size() == 3);
  CHECK(bucket(both[1]) == CloseCallTable{{0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}});
  CHECK(bucket(both[2]) == CloseCallTable{{1, 1, 1, 1, 0}, {0, 0, 2, 2, 0}});

  std::vector<BigCount> h2;
  std::vector<BigCount> h4;
  table_sweep(25, SweepMode::heady, [&](const ScoreDistribution& d) {
    h2.push_back(d.heady(1));
    h4.push_back(d.heady(-1));
    CHECK(d.total(Ending::taily) == 0);
  });
  CHECK(h2.back() == 1816610);
  CHECK(h4.back() == 1889008);
  CHECK(h4[9] == 93);

  std::vector<ScoreDistribution> twenty;
  table_sweep(20, SweepMode::both, [&](const ScoreDistribution& d) { twenty.push_back(d); });
  for (int n = 1; n <= 20; ++n) {
    CHECK(twenty[static_cast<std::size_t>(n - 1)] == dp_distribution(n));
    CHECK(twenty[static_cast<std::size_t>(n - 1)] == oracle::enumerate_distribution(n));
  }
  CHECK_THROWS_AS(table_sweep(0, SweepMode::both, [](const ScoreDistribution&) {}), std::invalid_argument);
}

TEST_CASE("windowed sweep tracks only the requested scores") {
  IncrementalSweep sweep(SweepMode::both, ScoreWindow{-2, 2});
  for (int n = 1; n <= 40; ++n) sweep.advance();
  for (const auto& [s, tv] : sweep.heady_terms()) CHECK((s >= -2 && s <= 2));
  CHECK(sweep.heady(2) == heady_count(2, 40));
  CHECK(sweep.heady(3) == 0);
  CHECK(sweep.taily(-2) == taily_count(-2, 40));
}

TEST_CASE("update hook sees every vector") {
  IncrementalSweep sweep(SweepMode::heady);
  int calls = 0;
  sweep.on_update([&](const TermVector& tv) {
    ++calls;
    CHECK(tv.sum() == heady_count(tv.score(), tv.length()));
  });
  for (int n = 1; n <= 30; ++n) sweep.advance();
  CHECK(calls > 30);
}
