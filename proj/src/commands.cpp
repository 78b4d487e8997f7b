#include "streakcount/commands.hpp"

#include "streakcount/counting.hpp"
#include "streakcount/oracle.hpp"
#include "streakcount/recurrence.hpp"
#include "streakcount/signatures.hpp"
#include "streakcount/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace streakcount::cli {

namespace {

enum class Method { closed, dp, incremental, oracle };
enum class Format { table, tsv, json };

const std::map<std::string, Method> method_names = {
    {"closed", Method::closed}, {"dp", Method::dp}, {"incremental", Method::incremental}, {"oracle", Method::oracle}};

// Failed assertion inside a command; exit status 1.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ScoreDistribution distribution_by(Method method, int n, int cap) {
  switch (method) {
    case Method::closed: return closed_form_distribution(n);
    case Method::dp: return dp_distribution(n);
    case Method::incremental: return incremental_distribution(n);
    case Method::oracle: return oracle::enumerate_distribution(n, {cap});
  }
  throw std::logic_error("unhandled method");
}

std::string fraction(const BigCount& value, const BigCount& total) { return value.str() + "/" + total.str(); }

// ---------------------------------------------------------------------------

void print_distribution(const ScoreDistribution& table, Format format, std::ostream& out) {
  const int n = table.length();
  switch (format) {
    case Format::table: {
      std::size_t width = 5;
      for (int s = table.highest_score(); s >= table.lowest_score(); --s)
        width = std::max({width, to_grouped_decimal(table.heady(s)).size(), to_grouped_decimal(table.taily(s)).size()});
      out << "n = " << n << '\n';
      out << std::setw(6) << "s" << "  " << std::setw(static_cast<int>(width)) << "heady" << "  "
          << std::setw(static_cast<int>(width)) << "taily" << '\n';
      for (int s = table.highest_score(); s >= table.lowest_score(); --s)
        out << std::setw(6) << s << "  " << std::setw(static_cast<int>(width)) << to_grouped_decimal(table.heady(s))
            << "  " << std::setw(static_cast<int>(width)) << to_grouped_decimal(table.taily(s)) << '\n';
      return;
    }
    case Format::tsv:
      out << "s\theady\ttaily\n";
      for (int s = table.highest_score(); s >= table.lowest_score(); --s)
        out << s << '\t' << table.heady(s) << '\t' << table.taily(s) << '\n';
      return;
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["n"] = n;
      doc["rows"] = nlohmann::ordered_json::array();
      for (int s = table.highest_score(); s >= table.lowest_score(); --s)
        doc["rows"].push_back({{"s", s}, {"heady", table.heady(s).str()}, {"taily", table.taily(s).str()}});
      out << doc.dump(2) << '\n';
      return;
    }
  }
}

void print_wins(const WinOdds& odds, int digits, Format format, std::ostream& out) {
  const auto increment = win_gap_increment(odds.n);
  const std::string delta = increment ? increment->str() : "undefined";
  struct Field {
    std::string name;
    const BigCount* value;
  };
  const std::vector<Field> fields = {
      {"alice", &odds.alice_wins}, {"bob", &odds.bob_wins}, {"ties", &odds.ties}, {"gap", &odds.gap}};

  switch (format) {
    case Format::table:
      out << "n " << odds.n << '\n';
      for (const auto& f : fields) out << f.name << ' ' << *f.value << '\n';
      out << "delta " << delta << '\n';
      for (const auto& f : fields)
        out << f.name << "_fraction " << fraction(*f.value, odds.sequences) << ' '
            << odds.fraction_decimal(*f.value, digits) << '\n';
      return;
    case Format::tsv:
      out << "field\tvalue\tdecimal\n";
      out << "n\t" << odds.n << "\t\n";
      for (const auto& f : fields) out << f.name << '\t' << *f.value << "\t\n";
      out << "delta\t" << delta << "\t\n";
      for (const auto& f : fields)
        out << f.name << "_fraction\t" << fraction(*f.value, odds.sequences) << '\t'
            << odds.fraction_decimal(*f.value, digits) << '\n';
      return;
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["n"] = odds.n;
      for (const auto& f : fields) doc[f.name] = f.value->str();
      doc["delta"] = delta;
      for (const auto& f : fields)
        doc[f.name + "_fraction"] = {{"exact", fraction(*f.value, odds.sequences)},
                                     {"decimal", odds.fraction_decimal(*f.value, digits)}};
      out << doc.dump(2) << '\n';
      return;
    }
  }
}

struct CloseCallRow {
  int n;
  BigCount h2;
  BigCount h4;
};

std::vector<CloseCallRow> close_call_rows(Method method, int from, int to, int cap) {
  std::vector<CloseCallRow> rows;
  const auto keep = [&](const ScoreDistribution& d) {
    if (d.length() >= from) rows.push_back({d.length(), d.heady(1), d.heady(-1)});
  };
  switch (method) {
    case Method::closed:
      for (int n = from; n <= to; ++n) rows.push_back({n, heady_count(1, n), win_gap(n)});
      break;
    case Method::dp: {
      ScoreDistribution d = dp_initial();
      for (int n = 1; n <= to; ++n) {
        if (n > 1) d = dp_extend(d);
        keep(d);
      }
      break;
    }
    case Method::incremental:
      table_sweep(to, SweepMode::heady, keep);
      break;
    case Method::oracle:
      for (int n = from; n <= to; ++n) keep(oracle::enumerate_distribution(n, {cap}));
      break;
  }
  return rows;
}

void print_close_calls(const std::vector<CloseCallRow>& rows, Format format, std::ostream& out) {
  switch (format) {
    case Format::table:
      for (const auto& r : rows) out << r.n << ' ' << r.h2 << ' ' << r.h4 << '\n';
      return;
    case Format::tsv:
      out << "n\th2\th4\n";
      for (const auto& r : rows) out << r.n << '\t' << r.h2 << '\t' << r.h4 << '\n';
      return;
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& r : rows) doc["rows"].push_back({{"n", r.n}, {"h2", r.h2.str()}, {"h4", r.h4.str()}});
      out << doc.dump(2) << '\n';
      return;
    }
  }
}

std::string join_parts(std::span<const unsigned> parts) {
  std::string text = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) text += (i ? "," : "") + std::to_string(parts[i]);
  return text + ")";
}

verify::Fault parse_fault(const std::string& text) {
  // heady:S:N or taily:S:N
  std::istringstream in(text);
  std::string ending, s, n;
  if (!std::getline(in, ending, ':') || !std::getline(in, s, ':') || !std::getline(in, n))
    throw std::invalid_argument("--inject-fault expects MODE:S:N, e.g. heady:1:10");
  return verify::Fault{parse_ending(ending), std::stoi(s), std::stoi(n)};
}

// Series value for the b-file writer; nullopt when undefined at n.
std::optional<BigCount> series_value(const std::string& series, int n) {
  if (series == "h2") return heady_count(1, n);
  if (series == "h4" || series == "D") return heady_count(-1, n);
  return win_gap_increment(n);
}

int first_index(const std::string& series) { return series == "delta" ? 3 : 2; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void run_bench(int max_n, std::ostream& out) {
  std::vector<ScoreDistribution> closed;
  std::vector<ScoreDistribution> dp;
  std::vector<ScoreDistribution> incremental;

  auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= max_n; ++n) closed.push_back(closed_form_distribution(n));
  const double closed_time = seconds_since(start);

  start = std::chrono::steady_clock::now();
  dp.push_back(dp_initial());
  for (int n = 2; n <= max_n; ++n) dp.push_back(dp_extend(dp.back()));
  const double dp_time = seconds_since(start);

  start = std::chrono::steady_clock::now();
  table_sweep(max_n, SweepMode::both, [&](const ScoreDistribution& d) { incremental.push_back(d); });
  const double incremental_time = seconds_since(start);

  for (int i = 0; i < max_n; ++i) {
    if (closed[static_cast<std::size_t>(i)] != dp[static_cast<std::size_t>(i)] ||
        closed[static_cast<std::size_t>(i)] != incremental[static_cast<std::size_t>(i)])
      throw CheckFailed("methods disagree at n = " + std::to_string(i + 1));
  }

  out << std::fixed << std::setprecision(3);
  out << "# closed-form  " << closed_time << " s\n";
  out << "# dp           " << dp_time << " s\n";
  out << "# incremental  " << incremental_time << " s\n";
  out << "agree 1.." << max_n << '\n';
  const auto& last = closed.back();
  out << "total " << last.total() << '\n';
  if (max_n >= 2) {
    out << "h2 " << last.heady(1) << '\n';
    out << "D " << last.heady(-1) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact score distributions for the HH-versus-HT coin game", "streakcount"};
  app.require_subcommand(1);
  app.fallthrough();

  int cap = oracle::default_cap;
  try {
    cap = oracle::cap_from_environment();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  app.add_option(oracle::cap_flag, cap, "Largest n for exhaustive enumeration")
      ->check(CLI::Range(1, oracle::packed_limit));

  const std::map<std::string, Format> format_names = {{"table", Format::table}, {"tsv", Format::tsv}, {"json", Format::json}};

  // dist
  int dist_n = 0;
  Method dist_method = Method::closed;
  Format dist_format = Format::table;
  auto* dist = app.add_subcommand("dist", "Heady and taily counts for every score at length n");
  dist->add_option("n", dist_n, "Number of tosses")->required()->check(CLI::PositiveNumber);
  dist->add_option("--method", dist_method)->transform(CLI::CheckedTransformer(method_names));
  dist->add_option("--format", dist_format)->transform(CLI::CheckedTransformer(format_names));

  // wins
  int wins_n = 0;
  int wins_digits = 6;
  Method wins_method = Method::closed;
  Format wins_format = Format::table;
  auto* wins = app.add_subcommand("wins", "Alice wins, Bob wins, ties and the win gap");
  wins->add_option("n", wins_n, "Number of tosses")->required()->check(CLI::PositiveNumber);
  wins->add_option("--digits", wins_digits, "Decimal places for fractions")->check(CLI::NonNegativeNumber);
  wins->add_option("--method", wins_method)->transform(CLI::CheckedTransformer(method_names));
  wins->add_option("--format", wins_format)->transform(CLI::CheckedTransformer(format_names));

  // table
  int table_from = 2;
  int table_to = 25;
  Method table_method = Method::closed;
  Format table_format = Format::table;
  auto* table = app.add_subcommand("table", "Heady close-call counts h2(n) and h4(n) = D(n)");
  table->add_option("--from", table_from)->check(CLI::Range(2, 1 << 20));
  table->add_option("--to", table_to)->check(CLI::Range(2, 1 << 20));
  table->add_option("--method", table_method)->transform(CLI::CheckedTransformer(method_names));
  table->add_option("--format", table_format)->transform(CLI::CheckedTransformer(format_names));

  // gen
  std::string gen_signature;
  int gen_length = 0;
  std::string gen_mode = "heady";
  bool gen_fixed = false;
  bool gen_show = false;
  auto* gen = app.add_subcommand("gen", "All sequences with a given signature, length and last toss");
  gen->add_option("--signature", gen_signature, "'+'/'-' marks; empty for the null signature")->required();
  gen->add_option("--length", gen_length)->required()->check(CLI::PositiveNumber);
  gen->add_option("--mode", gen_mode)->check(CLI::IsMember({"heady", "taily"}));
  gen->add_flag("--fixed-leading-one", gen_fixed, "Only sequences whose first toss is 1");
  gen->add_flag("--show-composition", gen_show, "Print the zero composition next to each sequence");

  // verify
  verify::Options verify_options;
  std::string fault_text;
  auto* ver = app.add_subcommand("verify", "Run every identity and cross-check suite");
  ver->add_option("--max-n", verify_options.max_n)->check(CLI::Range(1, 1 << 16));
  ver->add_option("--oracle-max", verify_options.oracle_max)->check(CLI::Range(0, oracle::packed_limit));
  ver->add_option("--inject-fault", fault_text, "Add 1 to one closed-form count (MODE:S:N), for testing");

  // bfile
  std::string bfile_series;
  int bfile_max = 0;
  std::optional<int> bfile_offset;
  auto* bfile = app.add_subcommand("bfile", "OEIS b-file for h2, h4, D or delta");
  bfile->add_option("--series", bfile_series)->required()->check(CLI::IsMember({"h2", "h4", "D", "delta"}));
  bfile->add_option("--max-n", bfile_max)->required()->check(CLI::PositiveNumber);
  bfile->add_option("--offset", bfile_offset, "First index written")->check(CLI::PositiveNumber);

  // bench
  int bench_max = 100;
  auto* bench = app.add_subcommand("bench", "Time closed-form, DP and incremental sweeps");
  bench->add_option("--max-n", bench_max)->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*dist) {
      print_distribution(distribution_by(dist_method, dist_n, cap), dist_format, out);
    } else if (*wins) {
      print_wins(win_odds(distribution_by(wins_method, wins_n, cap)), wins_digits, wins_format, out);
    } else if (*table) {
      if (table_from > table_to) throw std::invalid_argument("--from must not exceed --to");
      print_close_calls(close_call_rows(table_method, table_from, table_to, cap), table_format, out);
    } else if (*gen) {
      const GenerationPlan plan(Signature::parse(gen_signature), gen_length, parse_ending(gen_mode), gen_fixed);
      std::uint64_t emitted = 0;
      plan.for_each([&](const TossSequence& x, std::span<const unsigned> parts) {
        out << x.to_string();
        if (gen_show) out << '\t' << join_parts(parts);
        out << '\n';
        ++emitted;
      });
      out << "count " << emitted << '\n';
    } else if (*ver) {
      verify_options.oracle_cap = cap;
      if (!fault_text.empty()) verify_options.fault = parse_fault(fault_text);
      const auto results = verify::run_all(verify_options);
      std::size_t failed = 0;
      for (const auto& r : results) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
        if (!r.passed()) out << ", " << r.failures << " failed: " << r.first_failure;
        out << ")\n";
        if (!r.passed()) ++failed;
      }
      out << (failed == 0 ? "all " + std::to_string(results.size()) + " suites passed"
                          : std::to_string(failed) + " of " + std::to_string(results.size()) + " suites failed")
          << '\n';
      return failed == 0 ? 0 : 1;
    } else if (*bfile) {
      const int start = bfile_offset.value_or(first_index(bfile_series));
      if (bfile_series == "delta" && start < 3) throw std::invalid_argument("delta is undefined below n = 3");
      for (int n = start; n <= bfile_max; ++n) out << n << ' ' << *series_value(bfile_series, n) << '\n';
    } else if (*bench) {
      run_bench(bench_max, out);
    }
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace streakcount::cli
