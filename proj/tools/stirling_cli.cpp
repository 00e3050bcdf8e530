// stirling: command-line front end for the parking, enumeration, census,
// construction and verification routines.
//
// Exit codes: 0 success, 1 domain failure, 2 usage or parse error,
// 3 bound exceeded (scans above the ceiling need --force).

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "stirling/census.hpp"
#include "stirling/constructions.hpp"
#include "stirling/enumeration.hpp"
#include "stirling/errors.hpp"
#include "stirling/io.hpp"
#include "stirling/parking.hpp"
#include "stirling/statistics.hpp"
#include "stirling/verify.hpp"
#include "stirling/word.hpp"

namespace {

using namespace stirling;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_domain = 1;
constexpr int exit_usage = 2;
constexpr int exit_bound = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nonnegative integers separated by commas or whitespace; one pair of
/// surrounding brackets is tolerated.
std::vector<std::uint32_t> parse_uint_list(std::string_view text, std::string_view what) {
  const auto first = text.find_first_not_of(" \t");
  const auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) return {};
  text = text.substr(first, last - first + 1);
  if (text.size() >= 2 && std::string_view("({[").find(text.front()) != std::string_view::npos &&
      std::string_view(")}]").find(text.back()) != std::string_view::npos) {
    text = text.substr(1, text.size() - 2);
  }
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t stop = pos;
    while (stop < text.size() && !is_sep(text[stop])) ++stop;
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + stop, v);
    if (ec != std::errc{} || ptr != text.data() + stop) {
      throw ParseError("invalid " + std::string(what) + " entry '" + std::string(text.substr(pos, stop - pos)) + "'");
    }
    out.push_back(v);
    pos = stop;
  }
  return out;
}

/// "a..b", half-open.
RankRange parse_rank_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("rank range must look like a..b");
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError("invalid rank range '" + text + "'");
    }
    return v;
  };
  return RankRange{number(std::string_view(text).substr(0, dots)), number(std::string_view(text).substr(dots + 2))};
}

/// Default ceiling for exhaustive work, overridable through STIRLING_MAX_N.
unsigned order_ceiling() {
  const char* env = std::getenv("STIRLING_MAX_N");
  if (env == nullptr || *env == '\0') return default_max_order;
  unsigned v = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("STIRLING_MAX_N must be a nonnegative integer, got '" + std::string(s) + "'");
  }
  return v;
}

void require_within_ceiling(unsigned n, bool force) {
  const unsigned ceiling = order_ceiling();
  if (n > ceiling && !force) {
    throw BoundExceeded("order " + std::to_string(n) + " exceeds the ceiling " + std::to_string(ceiling) +
                        " (|Q_n| = " + std::to_string(stirling_count(n)) + "); pass --force to scan anyway");
  }
}

ScanOptions scan_options(unsigned n, unsigned jobs, bool force) {
  require_within_ceiling(n, force);
  return ScanOptions{jobs, std::max(n, order_ceiling())};
}

std::string word_line(std::span<const Spot> values) { return format_values(values) + "\n"; }

// --- park -------------------------------------------------------------------

struct ParkArgs {
  std::string word;
};

int cmd_park(const ParkArgs& a) {
  const auto word = parse_word(a.word);
  const auto outcome = park(word);
  std::cout << io::outcome_json(word, outcome).dump() << "\n";
  return exit_ok;
}

// --- enumerate --------------------------------------------------------------

struct EnumerateArgs {
  unsigned n = 0;
  std::string filter = "all";
  unsigned k = 0;
  std::string set;
  std::string rank_range;
  std::string format = "text";
  bool force = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
  require_within_ceiling(a.n, a.force);
  if (a.n > max_rankable_order) throw BoundExceeded("order exceeds the 64-bit rank space");
  Filter filter;
  if (a.filter == "all") {
    filter = Filter::all();
  } else if (a.filter == "extremely-lucky") {
    filter = Filter::extremely_lucky();
  } else if (a.filter == "extremely-unlucky") {
    filter = Filter::extremely_unlucky();
  } else if (a.filter == "lucky-count") {
    if (a.k == 0) throw UsageError("--filter lucky-count needs --k");
    filter = Filter::with_lucky_count(a.k);
  } else if (a.filter == "lucky-set") {
    if (a.set.empty()) throw UsageError("--filter lucky-set needs --set");
    filter = Filter::with_lucky_set(LuckySet(parse_uint_list(a.set, "set")));
  }
  if (!a.rank_range.empty()) filter.range = parse_rank_range(a.rank_range);

  auto stream = enumerate(a.n, filter);
  if (a.format == "json") {
    json arr = json::array();
    while (stream.next()) arr.push_back(io::to_json_array(stream.values()));
    std::cout << arr.dump() << "\n";
  } else {
    std::string out;
    while (stream.next()) out += word_line(stream.values());
    std::cout << out;
  }
  return exit_ok;
}

// --- stats ------------------------------------------------------------------

struct StatsArgs {
  unsigned n = 0;
  std::string format = "csv";
  bool paper_style = false;
  std::size_t size = 0;
  bool histogram = false;
  unsigned jobs = 1;
  bool force = false;
};

int cmd_lucky_poly(const StatsArgs& a) {
  const auto p = lucky_polynomial(a.n, scan_options(a.n, a.jobs, a.force));
  if (a.paper_style) {
    std::cout << render_paper_style(p) << "\n";
  } else if (a.format == "json") {
    std::cout << io::coefficients_json(a.n, p).dump() << "\n";
  } else {
    std::cout << io::coefficients_csv(p);
  }
  return exit_ok;
}

int cmd_admissible(const StatsArgs& a) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  const auto table = admissible_sets(a.n, scan_options(a.n, a.jobs, a.force));
  if (a.format == "json") {
    std::cout << io::admissible_json(table, a.size).dump() << "\n";
  } else if (a.format == "text") {
    std::string out;
    for (const auto& [set, entry] : io::ordered_sets(table.payload, a.size)) out += io::format_set(set) + "\n";
    std::cout << out;
  } else {
    std::cout << io::admissible_csv(table, a.size);
  }
  return exit_ok;
}

int cmd_disp_census(const StatsArgs& a) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  const auto table = displacement_census(a.n, scan_options(a.n, a.jobs, a.force));
  if (a.format == "json") {
    std::cout << io::displacement_json(table).dump() << "\n";
  } else if (a.format == "text") {
    std::cout << io::render_displacement_table(table);
  } else {
    std::cout << (a.histogram ? io::histogram_csv(table) : io::displacement_csv(table));
  }
  return exit_ok;
}

int cmd_gessel_seo(const StatsArgs& a) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  const unsigned bound = a.force ? std::max(a.n, default_gessel_seo_bound) : default_gessel_seo_bound;
  const auto check = gessel_seo_check(a.n, bound);
  if (a.format == "json") {
    std::cout << io::gessel_seo_json(a.n, check).dump() << "\n";
  } else if (a.paper_style) {
    std::cout << render_paper_style(check.computed) << "\n";
  } else {
    std::cout << io::gessel_seo_csv(check);
  }
  if (!check.equal) {
    std::cerr << "simulated distribution differs from the product formula\n";
    return exit_domain;
  }
  return exit_ok;
}

// --- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string input;  // positional: code, paren string, composition or word
  std::optional<unsigned> n;
  std::optional<std::uint64_t> index;
  std::string kind = "two-element";
  unsigned i = 0;
  std::string mode = "append";
  bool check = false;
};

int print_constructed(const StirlingWord& w, bool check) {
  std::cout << format_word(w) << "\n";
  if (check) std::cout << "lucky: " << io::format_set(lucky_set(w)) << "\n";
  return exit_ok;
}

int cmd_construct_unlucky(const ConstructArgs& a) {
  UnluckyChoiceCode code;
  if (a.index) {
    if (!a.n) throw UsageError("--index needs --n");
    code = UnluckyChoiceCode::from_index(*a.n, *a.index);
  } else {
    const auto choices = parse_uint_list(a.input, "code");
    const unsigned n = a.n.value_or(static_cast<unsigned>(choices.size()) + 1);
    code = UnluckyChoiceCode(n, choices);
  }
  return print_constructed(build_extremely_unlucky(code), a.check);
}

int cmd_construct_from_parens(const ConstructArgs& a) {
  return print_constructed(parens_to_extremely_lucky(ParenString::parse(a.input)), a.check);
}

int cmd_construct_from_disvec(const ConstructArgs& a) {
  const DisplacementComposition m(parse_uint_list(a.input, "composition"));
  return print_constructed(extremely_lucky_from_disvec(m), a.check);
}

int cmd_construct_witness(const ConstructArgs& a) {
  if (!a.n) throw UsageError("witness needs --n");
  if (a.kind == "two-element") {
    if (a.i == 0) throw UsageError("--kind two-element needs --i");
    return print_constructed(witness_two_element(*a.n, a.i), a.check);
  }
  return print_constructed(witness_1_n1_2n2(*a.n), a.check);
}

int cmd_construct_lift(const ConstructArgs& a) {
  const auto w = validate_stirling(parse_word(a.input));
  return print_constructed(lift_admissible(w, a.mode == "shift" ? LiftMode::shift : LiftMode::append), a.check);
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  unsigned max_n = verify::default_verify_max_order;
  unsigned jobs = 1;
};

int cmd_verify(const VerifyArgs& a) {
  const auto suite = a.suite == "tables"     ? verify::Suite::tables
                     : a.suite == "theorems" ? verify::Suite::theorems
                                             : verify::Suite::all;
  const auto report = verify::run(suite, verify::VerifyOptions{a.max_n, a.jobs});
  std::cout << report.render();
  return report.passed() ? exit_ok : exit_domain;
}

int report(const std::exception& e, int code) {
  std::cerr << "stirling: " << e.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stirling permutations as parking functions"};
  app.require_subcommand(1);

  ParkArgs park_args;
  auto* park_cmd = app.add_subcommand("park", "Park one preference word and print the outcome as JSON");
  park_cmd->add_option("word", park_args.word, "Preferences, e.g. 3,3,1,4,4,2,2,1")->required();

  EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "List Stirling permutations of order n in rank order");
  enum_cmd->add_option("--n", enum_args.n, "Order")->required();
  enum_cmd->add_option("--filter", enum_args.filter)
      ->check(CLI::IsMember({"all", "extremely-lucky", "extremely-unlucky", "lucky-count", "lucky-set"}));
  enum_cmd->add_option("--k", enum_args.k, "Lucky count for --filter lucky-count");
  enum_cmd->add_option("--set", enum_args.set, "Lucky set for --filter lucky-set, e.g. 1,3,6");
  enum_cmd->add_option("--rank-range", enum_args.rank_range, "Half-open rank range a..b");
  enum_cmd->add_option("--format", enum_args.format)->check(CLI::IsMember({"text", "json"}));
  enum_cmd->add_flag("--force", enum_args.force, "Allow orders above the ceiling");

  StatsArgs stats_args;
  auto* stats_cmd = app.add_subcommand("stats", "Exhaustive census tables");
  stats_cmd->require_subcommand(1);
  auto add_stats = [&](const std::string& name, const std::string& help, std::vector<std::string> formats) {
    auto* sub = stats_cmd->add_subcommand(name, help);
    sub->add_option("--n", stats_args.n, "Order")->required();
    sub->add_option("--format", stats_args.format)->check(CLI::IsMember(formats));
    sub->add_option("--jobs", stats_args.jobs, "Worker threads for the scan")->check(CLI::Range(1u, 256u));
    sub->add_flag("--force", stats_args.force, "Allow orders above the ceiling");
    return sub;
  };
  auto* lucky_poly_cmd = add_stats("lucky-poly", "Coefficients of T_n(q)", {"csv", "json"});
  lucky_poly_cmd->add_flag("--paper-style", stats_args.paper_style, "Render as a polynomial in q");
  auto* admissible_cmd = add_stats("admissible", "Admissible lucky sets with witnesses", {"csv", "json", "text"});
  admissible_cmd->add_option("--size", stats_args.size, "Only sets of this size");
  auto* disp_cmd = add_stats("disp-census", "Displacement compositions and their fibers", {"csv", "json", "text"});
  disp_cmd->add_flag("--histogram", stats_args.histogram, "Aggregate by number of nonzero parts");
  auto* gessel_cmd = add_stats("gessel-seo", "Lucky distribution over all parking functions", {"csv", "json"});
  gessel_cmd->add_flag("--paper-style", stats_args.paper_style, "Render as a polynomial in q");

  ConstructArgs con_args;
  auto* con_cmd = app.add_subcommand("construct", "Explicit constructions");
  con_cmd->require_subcommand(1);
  con_cmd->add_flag("--check", con_args.check, "Also print the simulated lucky set");
  auto* unlucky_cmd = con_cmd->add_subcommand("unlucky", "Extremely unlucky word from choices t_n,...,t_2");
  unlucky_cmd->add_option("code", con_args.input, "Choices t_n,...,t_2");
  unlucky_cmd->add_option("--n", con_args.n, "Order");
  unlucky_cmd->add_option("--index", con_args.index, "Code index in [0, (n-1)!)");
  unlucky_cmd->add_flag("--check", con_args.check);
  auto* parens_cmd = con_cmd->add_subcommand("from-parens", "Extremely lucky word from a balanced string");
  parens_cmd->add_option("parens", con_args.input)->required();
  parens_cmd->add_flag("--check", con_args.check);
  auto* disvec_cmd = con_cmd->add_subcommand("from-disvec", "Extremely lucky word from its displacement composition");
  disvec_cmd->add_option("composition", con_args.input)->required();
  disvec_cmd->add_flag("--check", con_args.check);
  auto* witness_cmd = con_cmd->add_subcommand("witness", "Word realizing an admissible lucky set");
  witness_cmd->add_option("--kind", con_args.kind)->check(CLI::IsMember({"two-element", "1-n1-2n2"}));
  witness_cmd->add_option("--n", con_args.n, "Order");
  witness_cmd->add_option("--i", con_args.i, "Second lucky car for --kind two-element");
  witness_cmd->add_flag("--check", con_args.check);
  auto* lift_cmd = con_cmd->add_subcommand("lift", "Lift a word to order n + 1");
  lift_cmd->add_option("word", con_args.input)->required();
  lift_cmd->add_option("--mode", con_args.mode)->check(CLI::IsMember({"append", "shift"}));
  lift_cmd->add_flag("--check", con_args.check);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run the golden-table and property suites");
  verify_cmd->add_option("--suite", verify_args.suite)->check(CLI::IsMember({"tables", "theorems", "all"}));
  verify_cmd->add_option("--max-n", verify_args.max_n, "Largest order any check visits");
  verify_cmd->add_option("--jobs", verify_args.jobs, "Worker threads for census scans")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*park_cmd) return cmd_park(park_args);
    if (*enum_cmd) return cmd_enumerate(enum_args);
    if (*lucky_poly_cmd) return cmd_lucky_poly(stats_args);
    if (*admissible_cmd) return cmd_admissible(stats_args);
    if (*disp_cmd) return cmd_disp_census(stats_args);
    if (*gessel_cmd) return cmd_gessel_seo(stats_args);
    if (*unlucky_cmd) return cmd_construct_unlucky(con_args);
    if (*parens_cmd) return cmd_construct_from_parens(con_args);
    if (*disvec_cmd) return cmd_construct_from_disvec(con_args);
    if (*witness_cmd) return cmd_construct_witness(con_args);
    if (*lift_cmd) return cmd_construct_lift(con_args);
    if (*verify_cmd) return cmd_verify(verify_args);
  } catch (const BoundExceeded& e) {
    return report(e, exit_bound);
  } catch (const ParseError& e) {
    return report(e, exit_usage);
  } catch (const InvalidFilter& e) {
    return report(e, exit_usage);
  } catch (const UsageError& e) {
    return report(e, exit_usage);
  } catch (const Error& e) {
    return report(e, exit_domain);
  }
  return exit_usage;
}
