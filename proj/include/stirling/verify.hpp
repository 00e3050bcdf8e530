#pragma once

// Exhaustive verification suites. Each check scans every order in its range
// (clipped to the requested maximum) and reports the first counterexample
// word of each failing order.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/census.hpp"
#include "stirling/constructions.hpp"
#include "stirling/enumeration.hpp"
#include "stirling/golden_tables.hpp"
#include "stirling/io.hpp"
#include "stirling/parking.hpp"
#include "stirling/statistics.hpp"
#include "stirling/word.hpp"

namespace stirling::verify {

struct CheckResult {
  std::string id;
  std::string scope;
  bool passed = true;
  std::string counterexample;  // set iff !passed
  double seconds = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }

  void append(const VerifyReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

  const CheckResult* find(std::string_view id) const {
    for (const auto& c : checks) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }

  /// One line per check, then a summary line. Timings are left out so the
  /// output is reproducible.
  std::string render() const {
    std::string out;
    std::size_t failed = 0;
    for (const auto& c : checks) {
      out += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.id + "  [" + c.scope + "]";
      if (!c.passed) {
        out += "  counterexample: " + c.counterexample;
        ++failed;
      }
      out += "\n";
    }
    out += "suite " + suite + ": " + std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
           " checks passed\n";
    return out;
  }
};

enum class Suite { tables, theorems, all };

/// Largest order any check asks for; the witness checks run up to 10.
inline constexpr unsigned default_verify_max_order = 10;

struct VerifyOptions {
  unsigned max_n = default_verify_max_order;
  unsigned jobs = 1;
};

namespace detail {

using Failure = std::optional<std::string>;

inline std::string show(std::span<const Spot> values) { return format_values(values); }

/// Runs `per_order` for n in [lo, min(hi, max_n)].
class Runner {
 public:
  Runner(std::string suite, unsigned max_n) : max_n_(max_n) { report_.suite = std::move(suite); }

  void over_orders(std::string id, unsigned lo, unsigned hi, const std::function<Failure(unsigned)>& per_order) {
    const unsigned top = std::min(hi, max_n_);
    CheckResult result;
    result.id = std::move(id);
    result.scope = lo <= top ? "n=" + std::to_string(lo) + ".." + std::to_string(top)
                             : "empty at max-n " + std::to_string(max_n_);
    const auto start = std::chrono::steady_clock::now();
    // Every order is scanned even after a failure, so a report lists each
    // failing order with its first counterexample.
    for (unsigned n = lo; n <= top; ++n) {
      if (auto failure = per_order(n)) {
        if (!result.passed) result.counterexample += "; ";
        result.passed = false;
        result.counterexample += "n=" + std::to_string(n) + ": " + *failure;
      }
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(result));
  }

  VerifyReport take() { return std::move(report_); }

 private:
  unsigned max_n_;
  VerifyReport report_;
};

/// Calls f(cursor, parking) for every w in Q_n; stops at the first failure.
template <class F>
Failure each_word(unsigned n, F&& f) {
  WordCursor cursor(n, RankRange::full(n));
  ParkingRun<> run;
  while (cursor.next()) {
    if (run.run(cursor.values()) != 0) return "w=" + show(cursor.values()) + " does not park";
    if (auto failure = f(cursor, run)) return "w=" + show(cursor.values()) + ": " + *failure;
  }
  return std::nullopt;
}

/// Q_n as the validated arrangements of {1,1,...,n,n}; independent of unrank.
inline std::vector<StirlingWord> stirling_by_multiset_filter(unsigned n) {
  std::vector<Spot> values;
  for (Spot v = 1; v <= n; ++v) values.insert(values.end(), {v, v});
  std::vector<StirlingWord> out;
  do {
    PreferenceWord word(values);
    if (is_stirling(word)) out.push_back(validate_stirling(word));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

/// Second-smallest lucky car, or 0.
inline Car second_lucky(const ParkingRun<>& run) {
  const auto d = run.displacement();
  std::size_t seen = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0 && ++seen == 2) return static_cast<Car>(i + 1);
  }
  return 0;
}

inline Failure expect_lucky(const StirlingWord& w, const LuckySet& claimed) {
  const auto actual = lucky_set(w);
  if (actual != claimed) {
    return "w=" + format_word(w) + " has Lucky " + io::format_set(actual) + ", claimed " + io::format_set(claimed);
  }
  return std::nullopt;
}

}  // namespace detail

/// Golden tables: the 4-admissible sets, T_2..T_8 and the Q_3 displacement table.
inline VerifyReport run_tables(const VerifyOptions& options) {
  using detail::Failure;
  detail::Runner r("tables", options.max_n);
  const ScanOptions scan{options.jobs, std::max(options.max_n, default_max_order)};

  r.over_orders("tables.admissible_sets_n4", 4, 4, [&](unsigned n) -> Failure {
    const auto rendered = io::render_admissible_table(admissible_sets(n, scan).payload);
    if (rendered != golden::admissible_sets_n4) return "rendered table differs from the golden copy:\n" + rendered;
    return std::nullopt;
  });

  r.over_orders("tables.lucky_polynomials", 2, 8, [&](unsigned n) -> Failure {
    const auto row = io::render_polynomial_row(n, lucky_polynomial(n, scan));
    const auto table = golden::lucky_polynomials;
    const auto begin = table.find("T_" + std::to_string(n) + "(q)");
    if (begin == std::string_view::npos) return "no golden row for T_" + std::to_string(n);
    const auto end = table.find('\n', begin);
    if (row != table.substr(begin, end - begin + 1)) return "rendered " + row;
    return std::nullopt;
  });

  r.over_orders("tables.displacement_compositions_q3", 3, 3, [&](unsigned n) -> Failure {
    const auto rendered = io::render_displacement_table(displacement_census(n, scan));
    if (rendered != golden::displacement_compositions_q3) {
      return "rendered table differs from the golden copy:\n" + rendered;
    }
    return std::nullopt;
  });

  return r.take();
}

/// Word-model and parking-process properties.
inline void parking_checks(detail::Runner& r) {
  using detail::Failure;

  r.over_orders("core.stirling_words_are_parking_functions", 1, 5, [](unsigned n) {
    return detail::each_word(n, [](const WordCursor& c, const ParkingRun<>&) -> Failure {
      if (!is_parking_function(c.values())) return "rejected by the sorted-word test";
      return std::nullopt;
    });
  });

  r.over_orders("core.validation_accepts_double_factorial", 1, 4, [](unsigned n) -> Failure {
    const auto accepted = detail::stirling_by_multiset_filter(n);
    if (accepted.size() != stirling_count(n)) {
      return "validation accepts " + std::to_string(accepted.size()) + " arrangements, expected " +
             std::to_string(stirling_count(n));
    }
    return std::nullopt;
  });

  r.over_orders("core.outcome_consistency", 1, 6, [](unsigned n) {
    return detail::each_word(n, [](const WordCursor& c, const ParkingRun<>&) -> Failure {
      const auto out = park(c.word());
      std::uint64_t total = 0;
      for (Car i = 1; i <= out.spots.size(); ++i) {
        const Spot pref = c.values()[i - 1];
        if (out.spots[i - 1] < pref) return "car " + std::to_string(i) + " parked before its preference";
        if (out.disvec(i) != out.spots[i - 1] - pref) return "disvec mismatch at car " + std::to_string(i);
        if (out.lucky.contains(i) != (out.disvec(i) == 0)) return "lucky set mismatch at car " + std::to_string(i);
        total += out.disvec(i);
      }
      if (total != out.total) return std::string("total mismatch");
      return std::nullopt;
    });
  });

  r.over_orders("park.spots_form_permutation", 1, 6, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor&, const ParkingRun<>& run) -> Failure {
      std::vector<Spot> spots(run.spots().begin(), run.spots().end());
      std::sort(spots.begin(), spots.end());
      for (std::size_t i = 0; i < spots.size(); ++i) {
        if (spots[i] != i + 1) return "spots are not a permutation of [1, " + std::to_string(2 * n) + "]";
      }
      return std::nullopt;
    });
  });

  r.over_orders("park.successor_structure_matches_linear_probe", 1, 6, [](unsigned n) {
    return detail::each_word(n, [](const WordCursor& c, const ParkingRun<>& run) -> Failure {
      ParkingRun<LinearProbeIndex> naive;
      naive.run(c.values());
      if (!std::equal(naive.spots().begin(), naive.spots().end(), run.spots().begin(), run.spots().end())) {
        return "successor structure and linear probing disagree";
      }
      return std::nullopt;
    });
  });

  r.over_orders("park.car_1_lucky_and_count_at_most_n", 1, 6, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor&, const ParkingRun<>& run) -> Failure {
      if (run.displacement()[0] != 0) return std::string("car 1 is unlucky");
      if (run.lucky_count() < 1 || run.lucky_count() > n) return "lucky(w) = " + std::to_string(run.lucky_count());
      return std::nullopt;
    });
  });

  r.over_orders("park.last_car_unlucky", 1, 6, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor&, const ParkingRun<>& run) -> Failure {
      if (run.displacement()[2 * n - 1] == 0) return "car " + std::to_string(2 * n) + " is lucky";
      return std::nullopt;
    });
  });

  r.over_orders("park.total_displacement_is_n_squared", 1, 6, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor&, const ParkingRun<>& run) -> Failure {
      const auto d = run.displacement();
      const auto total = std::accumulate(d.begin(), d.end(), std::uint64_t{0});
      if (total != std::uint64_t{n} * n) return "d(w) = " + std::to_string(total);
      return std::nullopt;
    });
  });

  r.over_orders("park.displacement_invariant_under_rearrangement", 1, 4, [](unsigned n) -> detail::Failure {
    std::mt19937_64 rng(0x5eed0000u + n);
    const std::uint64_t target = std::uint64_t{n} * n;
    ParkingRun<> run;
    std::vector<Spot> shuffled;
    auto check = [&](const std::vector<Spot>& word) -> Failure {
      if (run.run(word) != 0) return "rearrangement " + detail::show(word) + " does not park";
      const auto d = run.displacement();
      const auto total = std::accumulate(d.begin(), d.end(), std::uint64_t{0});
      if (total != target) return "rearrangement " + detail::show(word) + " has d = " + std::to_string(total);
      return std::nullopt;
    };
    WordCursor cursor(n, RankRange::full(n));
    while (cursor.next()) {
      const std::vector<Spot> w(cursor.values().begin(), cursor.values().end());
      if (n <= 2) {
        std::vector<std::size_t> sigma(w.size());
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
          shuffled.clear();
          for (auto s : sigma) shuffled.push_back(w[s]);
          if (auto f = check(shuffled)) return "w=" + detail::show(w) + ": " + *f;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
      } else {
        shuffled = w;
        for (int sample = 0; sample < 2000; ++sample) {
          std::shuffle(shuffled.begin(), shuffled.end(), rng);
          if (auto f = check(shuffled)) return "w=" + detail::show(w) + ": " + *f;
        }
      }
    }
    return std::nullopt;
  });

  r.over_orders("park.penultimate_lucky_iff_prefers_1", 1, 6, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor& c, const ParkingRun<>& run) -> Failure {
      const bool lucky = run.displacement()[2 * n - 2] == 0;
      const bool prefers_one = c.values()[2 * n - 2] == 1;
      if (lucky != prefers_one) return std::string("car 2n-1 lucky != (w(2n-1) = 1)");
      return std::nullopt;
    });
  });

  r.over_orders("park.first_car_preferring_1_is_lucky", 1, 6, [](unsigned n) {
    return detail::each_word(n, [](const WordCursor& c, const ParkingRun<>& run) -> Failure {
      const auto it = std::find(c.values().begin(), c.values().end(), Spot{1});
      const auto i = static_cast<std::size_t>(it - c.values().begin());
      if (run.displacement()[i] != 0) return "car " + std::to_string(i + 1) + " prefers 1 first but is unlucky";
      return std::nullopt;
    });
  });

  // Read with x as a car index. This reading fails: 2,2,1,1 has w(i) < 3 for
  // i <= 3 while car 3 takes the free spot 1.
  r.over_orders("park.small_prefix_values_make_car_unlucky", 1, 5, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor& c, const ParkingRun<>& run) -> Failure {
      for (std::size_t x = 2; x <= 2 * n; ++x) {
        const auto prefix = c.values().first(x);
        const bool hypothesis = std::all_of(prefix.begin(), prefix.end(), [x](Spot v) { return v < x; });
        if (hypothesis && run.displacement()[x - 1] == 0) {
          return "x=" + std::to_string(x) + ": w(i) < x for i <= x but car x is lucky";
        }
      }
      return std::nullopt;
    });
  });

  // Read with x as a spot: the car that ends in spot x is unlucky.
  r.over_orders("park.small_prefix_values_make_spot_unlucky", 1, 5, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor& c, const ParkingRun<>& run) -> Failure {
      const auto spots = run.spots();
      for (std::size_t x = 2; x <= 2 * n; ++x) {
        const auto prefix = c.values().first(x);
        if (!std::all_of(prefix.begin(), prefix.end(), [x](Spot v) { return v < x; })) continue;
        const auto car = static_cast<std::size_t>(std::find(spots.begin(), spots.end(), x) - spots.begin());
        if (run.displacement()[car] == 0) {
          return "x=" + std::to_string(x) + ": car " + std::to_string(car + 1) + " parks in spot x and is lucky";
        }
      }
      return std::nullopt;
    });
  });

  r.over_orders("park.extremely_unlucky_iff_prefix_criterion", 1, 6, [](unsigned n) {
    return detail::each_word(n, [](const WordCursor& c, const ParkingRun<>& run) -> Failure {
      const bool criterion = meets_unlucky_prefix_criterion(c.word());
      if (criterion != (run.lucky_count() == 1)) {
        return "criterion " + std::string(criterion ? "holds" : "fails") + " with lucky(w) = " +
               std::to_string(run.lucky_count());
      }
      return std::nullopt;
    });
  });
}

/// Rank/unrank, extreme counts, admissible-set and second-lucky-car properties.
inline void enumeration_checks(detail::Runner& r, const ScanOptions& scan) {
  using detail::Failure;

  r.over_orders("enum.unrank_yields_distinct_valid_words", 1, 6, [](unsigned n) -> Failure {
    std::set<StirlingWord> seen;
    for (std::uint64_t rk = 0; rk < stirling_count(n); ++rk) {
      const auto w = unrank(n, rk);
      if (!is_stirling(w.word())) return "unrank(" + std::to_string(rk) + ") = " + format_word(w) + " is invalid";
      if (!seen.insert(w).second) return "unrank(" + std::to_string(rk) + ") = " + format_word(w) + " repeats";
    }
    return std::nullopt;
  });

  r.over_orders("enum.rank_of_unrank_is_identity", 1, 6, [](unsigned n) -> Failure {
    for (std::uint64_t rk = 0; rk < stirling_count(n); ++rk) {
      const auto w = unrank(n, rk);
      if (rank(w) != rk) return "rank(unrank(" + std::to_string(rk) + ")) = " + std::to_string(rank(w));
    }
    return std::nullopt;
  });

  r.over_orders("enum.unrank_of_rank_is_identity", 1, 5, [](unsigned n) -> Failure {
    const auto words = detail::stirling_by_multiset_filter(n);
    if (words.size() != stirling_count(n)) return std::string("multiset filter count mismatch");
    for (const auto& w : words) {
      if (unrank(n, rank(w)) != w) return "w=" + format_word(w) + " does not round-trip";
    }
    return std::nullopt;
  });

  r.over_orders("enum.extremely_unlucky_count_is_factorial", 1, 7, [](unsigned n) -> Failure {
    std::uint64_t count = 0;
    for (const auto& item : enumerate(n, Filter::extremely_unlucky())) {
      (void)item;
      ++count;
    }
    if (count != factorial(n - 1)) return "found " + std::to_string(count) + ", expected (n-1)!";
    return std::nullopt;
  });

  r.over_orders("enum.extremely_lucky_count_is_catalan", 1, 7, [](unsigned n) -> Failure {
    std::uint64_t count = 0;
    for (const auto& item : enumerate(n, Filter::extremely_lucky())) {
      (void)item;
      ++count;
    }
    if (count != catalan(n)) return "found " + std::to_string(count) + ", expected C_n";
    return std::nullopt;
  });

  r.over_orders("enum.admissible_sets_contain_1_exclude_2n", 1, 6, [&](unsigned n) -> Failure {
    for (const auto& [set, entry] : admissible_sets(n, scan).payload.sets) {
      if (!set.contains(1) || set.contains(2 * n)) {
        return io::format_set(set) + " witnessed by " + format_word(unrank(n, entry.witness_rank));
      }
    }
    return std::nullopt;
  });

  r.over_orders("enum.admissible_sets_lift_to_next_order", 1, 5, [&](unsigned n) -> Failure {
    const auto here = admissible_sets(n, scan).payload;
    const auto next = admissible_sets(n + 1, scan).payload;
    for (const auto& [set, entry] : here.sets) {
      if (!next.contains(set)) return io::format_set(set) + " is not " + std::to_string(n + 1) + "-admissible";
      const auto lifted = set.with(2 * n + 1);
      if (!next.contains(lifted)) return io::format_set(lifted) + " is not " + std::to_string(n + 1) + "-admissible";
    }
    return std::nullopt;
  });

  r.over_orders("enum.two_element_characterization", 1, 6, [&](unsigned n) -> Failure {
    const auto family = admissible_sets(n, scan).payload;
    std::size_t size_two = 0;
    for (const auto& [set, entry] : family.sets) {
      if (set.size() != 2) continue;
      ++size_two;
      if (set.members()[0] != 1) return io::format_set(set) + " does not contain 1";
    }
    for (Car i = 2; i <= 2 * n; ++i) {
      const bool predicted = i <= n || i % 2 == 1;
      const bool admissible = family.contains(LuckySet{1, i});
      if (predicted != admissible) {
        return "{1," + std::to_string(i) + "} admissible=" + (admissible ? "yes" : "no") + ", predicted " +
               (predicted ? "yes" : "no");
      }
    }
    const std::size_t formula = (n - 1) + (n - 1 + 1) / 2;
    if (size_two != formula) return std::to_string(size_two) + " two-element sets, formula gives " + std::to_string(formula);
    return std::nullopt;
  });

  // n = 1 is left out: n - 1 = 0 is not a car. The scan fails at n = 3,
  // where {1,2,4} = Lucky(1,3,3,2,2,1).
  r.over_orders("enum.set_1_n1_2n2_admissible_iff_n_even", 2, 8, [&](unsigned n) -> Failure {
    const LuckySet s{1, n - 1, 2 * n - 2};
    const auto family = admissible_sets(n, scan).payload;
    const auto it = family.sets.find(s);
    const bool admissible = it != family.sets.end();
    if (admissible == (n % 2 == 0)) return std::nullopt;
    if (admissible) {
      return io::format_set(s) + " is admissible for odd n, witness " + format_word(unrank(n, it->second.witness_rank));
    }
    return io::format_set(s) + " is not admissible for even n";
  });

  r.over_orders("enum.second_lucky_above_n_is_odd", 1, 6, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor&, const ParkingRun<>& run) -> Failure {
      const Car x = detail::second_lucky(run);
      if (x > n && x % 2 == 0) return "second lucky car " + std::to_string(x) + " is even";
      return std::nullopt;
    });
  });


  r.over_orders("enum.initial_unlucky_cars_park_in_order", 1, 6, [](unsigned n) {
    return detail::each_word(n, [](const WordCursor& c, const ParkingRun<>& run) -> Failure {
      const Car x = detail::second_lucky(run);
      if (x == 0) return std::nullopt;
      for (Car y = 2; y < x; ++y) {
        if (run.spots()[y - 1] != c.values()[0] + y - 1) {
          return "car " + std::to_string(y) + " parks in spot " + std::to_string(run.spots()[y - 1]);
        }
      }
      return std::nullopt;
    });
  });

  r.over_orders("enum.second_lucky_preference_range", 1, 6, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor& c, const ParkingRun<>& run) -> Failure {
      const Car x = detail::second_lucky(run);
      if (x == 0 || c.values()[0] != 1) return std::nullopt;
      const Spot wx = c.values()[x - 1];
      if (wx < x || wx > n) return "x=" + std::to_string(x) + " but w(x) = " + std::to_string(wx);
      return std::nullopt;
    });
  });

  r.over_orders("enum.first_preference_bounds_lucky_count", 1, 6, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor& c, const ParkingRun<>& run) -> Failure {
      const Car x = detail::second_lucky(run);
      if (run.lucky_count() < 3 || x < n) return std::nullopt;
      const Spot w1 = c.values()[0];
      if (w1 < run.lucky_count()) return "w(1) = " + std::to_string(w1) + " < lucky(w)";
      const auto d = run.displacement();
      for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0 && run.spots()[i] > w1) return "lucky car " + std::to_string(i + 1) + " parks beyond w(1)";
      }
      return std::nullopt;
    });
  });

  r.over_orders("enum.second_lucky_n_forces_pair", 1, 6, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor& c, const ParkingRun<>& run) -> Failure {
      if (detail::second_lucky(run) != n) return std::nullopt;
      const bool w1_is_1 = c.values()[0] == 1;
      const bool forced = c.values()[n - 1] == n && run.lucky_count() == 2;
      if (n % 2 == 0 && !(w1_is_1 && forced)) return std::string("n even: expected w(1)=1, w(n)=n, |S|=2");
      if (n % 2 == 1 && w1_is_1 && !forced) return std::string("n odd, w(1)=1: expected w(n)=n, |S|=2");
      return std::nullopt;
    });
  });

  r.over_orders("enum.first_occurrence_below_prefix_is_odd", 1, 6, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor& c, const ParkingRun<>&) -> Failure {
      const auto v = c.values();
      for (Spot k = 1; k <= n; ++k) {
        const auto j = static_cast<std::size_t>(std::find(v.begin(), v.end(), k) - v.begin());
        const bool smaller_than_prefix = std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j),
                                                     [k](Spot u) { return u > k; });
        if (smaller_than_prefix && (j + 1) % 2 == 0) {
          return "first " + std::to_string(k) + " at even position " + std::to_string(j + 1);
        }
      }
      return std::nullopt;
    });
  });

  r.over_orders("enum.census_merge_over_partitions", 1, 5, [](unsigned n) -> Failure {
    std::mt19937_64 rng(0xce25u + n);
    const auto total = stirling_count(n);
    const auto lucky = scan_range<LuckyCounts>(n, RankRange::full(n));
    const auto family = scan_range<AdmissibleFamily>(n, RankRange::full(n));
    const auto fibers = scan_range<DisplacementFibers>(n, RankRange::full(n));
    const auto zeros = scan_range<ZeroPartHistogram>(n, RankRange::full(n));
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<std::uint64_t> cut(0, total);
      std::vector<std::uint64_t> cuts{0, total};
      const int extra = trial % 6;
      for (int i = 0; i < extra; ++i) cuts.push_back(cut(rng));
      std::sort(cuts.begin(), cuts.end());
      std::vector<RankRange> ranges;
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i) ranges.push_back(RankRange{cuts[i], cuts[i + 1]});
      std::shuffle(ranges.begin(), ranges.end(), rng);

      auto merged = [&](auto tag) {
        using Payload = typename decltype(tag)::type;
        CensusTable<Payload> t;
        t.order = n;
        t.payload.reset(n);
        for (const auto& range : ranges) t.merge(scan_range<Payload>(n, range));
        return t;
      };
      std::string cuts_text = "cuts";
      for (auto c : cuts) cuts_text += " " + std::to_string(c);
      if (!(merged(std::type_identity<LuckyCounts>{}) == lucky)) return "lucky counts differ at " + cuts_text;
      if (!(merged(std::type_identity<AdmissibleFamily>{}) == family)) return "admissible sets differ at " + cuts_text;
      if (!(merged(std::type_identity<DisplacementFibers>{}) == fibers)) return "fibers differ at " + cuts_text;
      if (!(merged(std::type_identity<ZeroPartHistogram>{}) == zeros)) return "histogram differs at " + cuts_text;
    }
    return std::nullopt;
  });
}

/// Explicit constructions checked against simulation.
inline void construction_checks(detail::Runner& r) {
  using detail::Failure;

  r.over_orders("cons.unlucky_builder_is_bijection_onto_extremely_unlucky", 1, 6, [](unsigned n) -> Failure {
    std::set<StirlingWord> image;
    for (std::uint64_t idx = 0; idx < factorial(n - 1); ++idx) {
      const auto code = UnluckyChoiceCode::from_index(n, idx);
      const auto w = build_extremely_unlucky(code);
      if (lucky_count(w) != 1) return "code index " + std::to_string(idx) + " builds " + format_word(w) + ", not extremely unlucky";
      if (!image.insert(w).second) return "code index " + std::to_string(idx) + " repeats " + format_word(w);
    }
    const auto all = collect(n, Filter::extremely_unlucky());
    if (std::set<StirlingWord>(all.begin(), all.end()) != image) {
      return "image has " + std::to_string(image.size()) + " words, enumeration has " + std::to_string(all.size());
    }
    return std::nullopt;
  });

  r.over_orders("cons.unlucky_builder_meets_prefix_criterion", 1, 6, [](unsigned n) -> Failure {
    for (std::uint64_t idx = 0; idx < factorial(n - 1); ++idx) {
      const auto w = build_extremely_unlucky(UnluckyChoiceCode::from_index(n, idx));
      if (!meets_unlucky_prefix_criterion(w)) return "w=" + format_word(w);
    }
    return std::nullopt;
  });

  r.over_orders("cons.parens_bijection", 1, 7, [](unsigned n) -> Failure {
    std::set<StirlingWord> image;
    for (const auto& p : all_paren_strings(n)) {
      const auto w = parens_to_extremely_lucky(p);
      if (!is_stirling(w.word())) return p.str() + " maps to the invalid word " + format_word(w);
      if (lucky_count(w) != n) return p.str() + " maps to " + format_word(w) + " with lucky count below n";
      if (stirling_to_parens(w) != p) return p.str() + " does not round-trip";
      image.insert(w);
    }
    if (image.size() != catalan(n)) return "image size " + std::to_string(image.size());
    for (const auto& w : collect(n, Filter::extremely_lucky())) {
      if (parens_to_extremely_lucky(stirling_to_parens(w)) != w) return "w=" + format_word(w) + " does not round-trip";
    }
    return std::nullopt;
  });

  r.over_orders("cons.extremely_lucky_iff_second_occurrences_decrease", 1, 6, [](unsigned n) {
    return detail::each_word(n, [n](const WordCursor& c, const ParkingRun<>& run) -> Failure {
      const bool structural = second_occurrences_decreasing(c.values());
      if (structural != (run.lucky_count() == n)) {
        return "structural test says " + std::string(structural ? "yes" : "no") + ", lucky(w) = " +
               std::to_string(run.lucky_count());
      }
      return std::nullopt;
    });
  });

  r.over_orders("cons.extremely_lucky_unlucky_car_profile", 1, 6, [](unsigned n) -> Failure {
    for (const auto& w : collect(n, Filter::extremely_lucky())) {
      const auto out = park(w);
      unsigned i = 0;
      for (Car car = 1; car <= w.size(); ++car) {
        if (out.disvec(car) == 0) continue;
        ++i;
        if (w(car) != n - i + 1 || out.disvec(car) != 2 * i - 1) {
          return "w=" + format_word(w) + ": unlucky car #" + std::to_string(i) + " prefers " + std::to_string(w(car)) +
                 " with displacement " + std::to_string(out.disvec(car));
        }
      }
    }
    return std::nullopt;
  });

  r.over_orders("cons.disvec_reconstruction", 1, 6, [](unsigned n) -> Failure {
    std::set<DisplacementComposition> seen;
    for (const auto& w : collect(n, Filter::extremely_lucky())) {
      const auto d = displacement_composition(w);
      if (!seen.insert(d).second) return "disvec of " + format_word(w) + " is shared";
      const auto rebuilt = extremely_lucky_from_disvec(d);
      if (rebuilt != w) return "w=" + format_word(w) + " rebuilds as " + format_word(rebuilt);
    }
    return std::nullopt;
  });

  r.over_orders("cons.witnesses_simulate", 1, 10, [](unsigned n) -> Failure {
    for (Car i = 2; i + 1 <= 2 * n; ++i) {
      if (!(i <= n || i % 2 == 1)) continue;
      if (auto f = detail::expect_lucky(witness_two_element(n, i), LuckySet{1, i})) return f;
    }
    if (n >= 4 && n % 2 == 0) {
      if (auto f = detail::expect_lucky(witness_1_n1_2n2(n), LuckySet{1, n - 1, 2 * n - 2})) return f;
    }
    return std::nullopt;
  });

  r.over_orders("cons.lifts_simulate", 1, 9, [](unsigned n) -> Failure {
    std::vector<StirlingWord> sources;
    for (Car i = 2; i + 1 <= 2 * n; ++i) {
      if (i <= n || i % 2 == 1) sources.push_back(witness_two_element(n, i));
    }
    if (n >= 4 && n % 2 == 0) sources.push_back(witness_1_n1_2n2(n));
    if (n <= 5) {
      for (const auto& [set, entry] : admissible_sets(n).payload.sets) sources.push_back(unrank(n, entry.witness_rank));
    }
    for (const auto& w : sources) {
      const auto s = lucky_set(w);
      const auto appended = lift_admissible(w, LiftMode::append);
      const auto shifted = lift_admissible(w, LiftMode::shift);
      if (!is_stirling(appended.word()) || !is_stirling(shifted.word())) return "lift of " + format_word(w) + " is invalid";
      if (auto f = detail::expect_lucky(appended, s)) return f;
      if (auto f = detail::expect_lucky(shifted, s.with(2 * n + 1))) return f;
    }
    return std::nullopt;
  });
}

/// Lucky polynomial identities.
inline void statistics_checks(detail::Runner& r, const ScanOptions& scan) {
  using detail::Failure;

  r.over_orders("stats.lucky_polynomial_boundary_coefficients", 1, 7, [&](unsigned n) -> Failure {
    const auto p = lucky_polynomial(n, scan);
    if (p.sum() != stirling_count(n)) return "coefficients sum to " + std::to_string(p.sum());
    if (p.at(1) != factorial(n - 1)) return "a_1 = " + std::to_string(p.at(1));
    if (p.at(n) != catalan(n)) return "a_n = " + std::to_string(p.at(n));
    return std::nullopt;
  });

  r.over_orders("stats.lucky_polynomial_matches_zero_parts", 1, 5, [&](unsigned n) -> Failure {
    const auto p = lucky_polynomial(n, scan);
    const auto h = displacement_census(n, scan).payload.nonzero_part_histogram(n);
    for (unsigned k = 0; k <= 2 * n; ++k) {
      const std::uint64_t zero_parts = h[2 * n - k];
      const std::uint64_t expected = k == 0 ? 0 : p.at(k);
      if (zero_parts != expected) {
        return std::to_string(zero_parts) + " words with " + std::to_string(k) + " zero parts, a_k = " +
               std::to_string(expected);
      }
    }
    return std::nullopt;
  });

  r.over_orders("stats.parking_function_lucky_distribution", 1, 6, [](unsigned n) -> Failure {
    const auto check = gessel_seo_check(n, std::max(n, default_gessel_seo_bound));
    if (!check.equal) {
      return "simulated " + render_paper_style(check.computed) + ", product " + render_paper_style(check.closed_form);
    }
    return std::nullopt;
  });
}

/// Every exhaustive property over Q_n.
inline VerifyReport run_theorems(const VerifyOptions& options) {
  detail::Runner r("theorems", options.max_n);
  const ScanOptions scan{options.jobs, std::max(options.max_n + 1, default_max_order)};
  parking_checks(r);
  enumeration_checks(r, scan);
  construction_checks(r);
  statistics_checks(r, scan);
  return r.take();
}

inline const char* to_string(Suite suite) {
  switch (suite) {
    case Suite::tables: return "tables";
    case Suite::theorems: return "theorems";
    case Suite::all: return "all";
  }
  return "unknown";
}

inline VerifyReport run(Suite suite, const VerifyOptions& options) {
  if (suite == Suite::tables) return run_tables(options);
  if (suite == Suite::theorems) return run_theorems(options);
  VerifyReport report = run_tables(options);
  report.suite = to_string(suite);
  report.append(run_theorems(options));
  return report;
}

}  // namespace stirling::verify
