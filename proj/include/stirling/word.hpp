#pragma once

// Value types for preference words, Stirling permutations, lucky sets and
// displacement compositions. Cars and spots are 1-based at every API boundary.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/errors.hpp"

namespace stirling {

using Spot = std::uint32_t;  // a 1-based parking spot, also a word value
using Car = std::uint32_t;   // a 1-based car index

/// A sequence of spot preferences; car i prefers spot `(*this)(i)`.
class PreferenceWord {
 public:
  PreferenceWord() = default;

  explicit PreferenceWord(std::vector<Spot> prefs) : prefs_(std::move(prefs)) {
    for (std::size_t i = 0; i < prefs_.size(); ++i) {
      if (prefs_[i] == 0) {
        throw ValidationError(ValidationError::Kind::zero_entry, 0, 0,
                              "preference of car " + std::to_string(i + 1) + " is 0");
      }
    }
  }

  PreferenceWord(std::initializer_list<Spot> prefs) : PreferenceWord(std::vector<Spot>(prefs)) {}

  std::size_t size() const noexcept { return prefs_.size(); }
  bool empty() const noexcept { return prefs_.empty(); }

  /// Preference of car i, 1-based.
  Spot operator()(Car i) const { return prefs_.at(i - 1); }

  std::span<const Spot> values() const noexcept { return prefs_; }

  auto operator<=>(const PreferenceWord&) const = default;

 private:
  std::vector<Spot> prefs_;
};

namespace detail {
struct unchecked_t {
  explicit unchecked_t() = default;
};
inline constexpr unchecked_t unchecked{};
}  // namespace detail

/// A validated Stirling permutation of order n (length 2n).
class StirlingWord {
 public:
  StirlingWord() = default;

  /// For producers that build valid words by construction (unrank, builders).
  StirlingWord(detail::unchecked_t, unsigned order, std::vector<Spot> values)
      : order_(order), word_(std::move(values)) {}

  unsigned order() const noexcept { return order_; }
  std::size_t size() const noexcept { return word_.size(); }
  const PreferenceWord& word() const noexcept { return word_; }
  std::span<const Spot> values() const noexcept { return word_.values(); }

  /// w(i), 1-based.
  Spot operator()(Car i) const { return word_(i); }

  auto operator<=>(const StirlingWord&) const = default;

 private:
  unsigned order_ = 0;
  PreferenceWord word_;
};

/// A set of car indices, stored strictly increasing.
class LuckySet {
 public:
  LuckySet() = default;

  explicit LuckySet(std::vector<Car> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  LuckySet(std::initializer_list<Car> members) : LuckySet(std::vector<Car>(members)) {}

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Car i) const { return std::binary_search(members_.begin(), members_.end(), i); }
  std::span<const Car> members() const noexcept { return members_; }

  /// Smallest member greater than the minimum, or 0 when |S| < 2.
  Car second_smallest() const noexcept { return members_.size() >= 2 ? members_[1] : 0; }

  LuckySet with(Car i) const {
    auto m = members_;
    m.push_back(i);
    return LuckySet(std::move(m));
  }

  // Lexicographic on the sorted member list.
  auto operator<=>(const LuckySet&) const = default;

 private:
  std::vector<Car> members_;
};

/// Per-car displacement vector (d(1), ..., d(m)).
class DisplacementComposition {
 public:
  DisplacementComposition() = default;
  explicit DisplacementComposition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {}
  DisplacementComposition(std::initializer_list<std::uint32_t> parts) : parts_(parts) {}

  std::size_t size() const noexcept { return parts_.size(); }
  std::span<const std::uint32_t> parts() const noexcept { return parts_; }
  std::uint32_t operator()(Car i) const { return parts_.at(i - 1); }

  std::uint64_t sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
  }
  std::size_t nonzero_parts() const {
    return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](auto d) { return d != 0; }));
  }
  std::size_t zero_parts() const { return parts_.size() - nonzero_parts(); }

  auto operator<=>(const DisplacementComposition&) const = default;

 private:
  std::vector<std::uint32_t> parts_;
};

/// True iff the weakly increasing rearrangement b satisfies b_i <= i.
inline bool is_parking_function(std::span<const Spot> prefs) {
  std::vector<Spot> sorted(prefs.begin(), prefs.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > i + 1) return false;
  }
  return true;
}

inline bool is_parking_function(const PreferenceWord& word) { return is_parking_function(word.values()); }

/// Checks the multiset and betweenness conditions; throws ValidationError on
/// the first violation in left-to-right order.
inline StirlingWord validate_stirling(const PreferenceWord& word) {
  using Kind = ValidationError::Kind;
  const auto values = word.values();
  if (values.size() % 2 != 0) {
    throw ValidationError(Kind::odd_length, 0, 0,
                          "word length " + std::to_string(values.size()) + " is odd");
  }
  const auto n = static_cast<Spot>(values.size() / 2);

  std::vector<std::size_t> first(n + 1, values.size());
  std::vector<std::size_t> second(n + 1, values.size());
  for (std::size_t p = 0; p < values.size(); ++p) {
    const Spot v = values[p];
    if (v > n) {
      throw ValidationError(Kind::wrong_multiset, v, 0,
                            "value " + std::to_string(v) + " exceeds order " + std::to_string(n));
    }
    if (first[v] == values.size()) {
      first[v] = p;
    } else if (second[v] == values.size()) {
      second[v] = p;
    } else {
      throw ValidationError(Kind::wrong_multiset, v, 0,
                            "value " + std::to_string(v) + " appears more than twice");
    }
  }
  for (Spot v = 1; v <= n; ++v) {
    if (second[v] == values.size()) {
      throw ValidationError(Kind::wrong_multiset, v, 0,
                            "value " + std::to_string(v) + " does not appear twice");
    }
  }

  for (std::size_t p = 0; p < values.size(); ++p) {
    const Spot v = values[p];
    if (first[v] != p) continue;
    for (std::size_t q = p + 1; q < second[v]; ++q) {
      if (values[q] < v) {
        throw ValidationError(Kind::stirling_violation, v, values[q],
                              std::to_string(values[q]) + " appears between the two copies of " +
                                  std::to_string(v));
      }
    }
  }
  return StirlingWord(detail::unchecked, n, std::vector<Spot>(values.begin(), values.end()));
}

inline bool is_stirling(const PreferenceWord& word) {
  try {
    validate_stirling(word);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

/// Canonical text form: comma-separated decimal values.
template <class Range>
std::string format_values(const Range& values, char sep = ',') {
  std::string out;
  bool first = true;
  for (auto v : values) {
    if (!first) out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

inline std::string format_word(const PreferenceWord& w) { return format_values(w.values()); }
inline std::string format_word(const StirlingWord& w) { return format_values(w.values()); }

/// Paper-style compact digit string ("123321"); only meaningful for order <= 9.
inline std::string compact_word(const StirlingWord& w) {
  std::string out;
  for (auto v : w.values()) out += std::to_string(v);
  return out;
}

/// Parses comma/whitespace separated values, or a compact digit string such as
/// "33144221" (at most 18 digits, i.e. order <= 9).
inline PreferenceWord parse_word(std::string_view text) {
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  const auto begin = text.find_first_not_of(", \t\r\n");
  if (begin == std::string_view::npos) return PreferenceWord{};
  const auto end = text.find_last_not_of(", \t\r\n");
  text = text.substr(begin, end - begin + 1);

  std::vector<Spot> values;
  const bool separated = std::any_of(text.begin(), text.end(), is_sep);
  if (!separated && text.size() > 1) {
    if (text.size() > 18) {
      throw ParseError("compact digit form is only accepted for order <= 9; use commas");
    }
    for (char c : text) {
      if (c < '1' || c > '9') throw ParseError(std::string("invalid digit '") + c + "' in word");
      values.push_back(static_cast<Spot>(c - '0'));
    }
    return PreferenceWord(std::move(values));
  }

  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t stop = pos;
    while (stop < text.size() && !is_sep(text[stop])) ++stop;
    const auto token = text.substr(pos, stop - pos);
    Spot v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("invalid value '" + std::string(token) + "' in word");
    }
    if (v == 0) throw ParseError("preferences are 1-based; got 0");
    values.push_back(v);
    pos = stop;
  }
  return PreferenceWord(std::move(values));
}

}  // namespace stirling
