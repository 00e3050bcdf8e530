#pragma once

// Rank/unrank for Q_n and pull-based streams over it.
//
// A word of order n is built from "1 1" by inserting the block "k k" for
// k = 2..n into one of the 2k-1 gaps of the current word (gap 0 before the
// word, gap 2k-2 after it). The gap choices c_2..c_n form a mixed-radix
// number with radices 3, 5, ..., 2n-1 and c_2 least significant; that number
// is the rank.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stirling/errors.hpp"
#include "stirling/integer.hpp"
#include "stirling/parking.hpp"
#include "stirling/word.hpp"

namespace stirling {

/// Default exhaustive-scan ceiling (|Q_8| = 2,027,025).
inline constexpr unsigned default_max_order = 8;
/// Largest order whose rank space fits in 64 bits.
inline constexpr unsigned max_rankable_order = 17;

inline std::uint64_t stirling_count(unsigned n) { return double_factorial_odd(n); }

/// Half-open rank interval [begin, end).
struct RankRange {
  std::uint64_t begin = 0;
  std::uint64_t end = 0;

  std::uint64_t size() const noexcept { return end > begin ? end - begin : 0; }
  bool operator==(const RankRange&) const = default;

  static RankRange full(unsigned n) { return {0, stirling_count(n)}; }
};

/// Splits [range.begin, range.end) into `parts` contiguous pieces (some may be empty).
inline std::vector<RankRange> partition_ranks(RankRange range, unsigned parts) {
  if (parts == 0) parts = 1;
  std::vector<RankRange> out;
  const auto total = range.size();
  const auto base = total / parts;
  const auto extra = total % parts;
  auto cursor = range.begin;
  for (unsigned i = 0; i < parts; ++i) {
    const auto len = base + (i < extra ? 1 : 0);
    out.push_back({cursor, cursor + len});
    cursor += len;
  }
  return out;
}

/// Mixed-radix gap choices c_2..c_n with c_k in [0, 2k-2].
class InsertionCode {
 public:
  explicit InsertionCode(unsigned order) : order_(order), digits_(order > 1 ? order - 1 : 0, 0) {}

  static InsertionCode from_rank(unsigned order, std::uint64_t r) {
    if (order > max_rankable_order) {
      throw RankOutOfRange("order " + std::to_string(order) + " exceeds the 64-bit rank space");
    }
    if (r >= stirling_count(order)) {
      throw RankOutOfRange("rank " + std::to_string(r) + " outside [0, " +
                           std::to_string(stirling_count(order)) + ") for order " + std::to_string(order));
    }
    InsertionCode code(order);
    for (unsigned k = 2; k <= order; ++k) {
      code.digits_[k - 2] = static_cast<std::uint32_t>(r % (2 * k - 1));
      r /= (2 * k - 1);
    }
    return code;
  }

  unsigned order() const noexcept { return order_; }

  /// c_k for k in [2, n].
  std::uint32_t digit(unsigned k) const { return digits_.at(k - 2); }

  void set_digit(unsigned k, std::uint32_t c) {
    if (k < 2 || k > order_ || c > 2 * k - 2) {
      throw RankOutOfRange("insertion digit c_" + std::to_string(k) + " = " + std::to_string(c) + " out of range");
    }
    digits_[k - 2] = c;
  }

  std::uint64_t rank() const {
    std::uint64_t r = 0;
    for (unsigned k = order_; k >= 2; --k) r = r * (2 * k - 1) + digits_[k - 2];
    return r;
  }

  /// Odometer step with c_2 fastest; returns false after wrapping to all zeros.
  bool increment() {
    for (unsigned k = 2; k <= order_; ++k) {
      auto& d = digits_[k - 2];
      if (d + 1 <= 2 * k - 2) {
        ++d;
        return true;
      }
      d = 0;
    }
    return false;
  }

  /// Writes the word this code encodes into `out` (length 2n).
  void decode_into(std::vector<Spot>& out) const {
    out.clear();
    if (order_ == 0) return;
    out.reserve(2 * order_);
    out.push_back(1);
    out.push_back(1);
    for (unsigned k = 2; k <= order_; ++k) {
      const auto gap = static_cast<std::ptrdiff_t>(digits_[k - 2]);
      out.insert(out.begin() + gap, {k, k});
    }
  }

  StirlingWord decode() const {
    std::vector<Spot> values;
    decode_into(values);
    return StirlingWord(detail::unchecked, order_, std::move(values));
  }

  bool operator==(const InsertionCode&) const = default;

 private:
  unsigned order_;
  std::vector<std::uint32_t> digits_;  // digits_[k-2] = c_k
};

/// The gap choices that rebuild w: repeatedly peel off the (adjacent) copies
/// of the largest value.
inline InsertionCode insertion_code(const StirlingWord& w) {
  const unsigned n = w.order();
  InsertionCode code(n);
  std::vector<Spot> values(w.values().begin(), w.values().end());
  for (unsigned k = n; k >= 2; --k) {
    std::size_t p = 0;
    while (values[p] != k) ++p;
    code.set_digit(k, static_cast<std::uint32_t>(p));
    values.erase(values.begin() + static_cast<std::ptrdiff_t>(p), values.begin() + static_cast<std::ptrdiff_t>(p) + 2);
  }
  return code;
}

inline StirlingWord unrank(unsigned n, std::uint64_t r) { return InsertionCode::from_rank(n, r).decode(); }

inline std::uint64_t rank(const StirlingWord& w) { return insertion_code(w).rank(); }

/// Allocation-free walk over a rank range, in increasing rank order.
class WordCursor {
 public:
  WordCursor(unsigned n, RankRange range) : order_(n), range_(range), code_(n) {
    if (range.begin > range.end || range.end > stirling_count(n)) {
      throw RankOutOfRange("rank range [" + std::to_string(range.begin) + ", " + std::to_string(range.end) +
                           ") outside [0, " + std::to_string(stirling_count(n)) + ")");
    }
    rank_ = range.begin;
  }

  /// Moves to the next word; false when the range is exhausted.
  bool next() {
    if (!started_) {
      started_ = true;
      if (range_.size() == 0) return false;
      code_ = InsertionCode::from_rank(order_, rank_);
    } else {
      if (rank_ + 1 >= range_.end) {
        rank_ = range_.end;
        return false;
      }
      ++rank_;
      code_.increment();
    }
    code_.decode_into(values_);
    return true;
  }

  unsigned order() const noexcept { return order_; }
  std::uint64_t rank() const noexcept { return rank_; }
  std::span<const Spot> values() const noexcept { return values_; }
  StirlingWord word() const { return StirlingWord(detail::unchecked, order_, values_); }

 private:
  unsigned order_;
  RankRange range_;
  InsertionCode code_;
  std::uint64_t rank_ = 0;
  bool started_ = false;
  std::vector<Spot> values_;
};

/// True iff the second occurrences of the values read n, n-1, ..., 1.
inline bool second_occurrences_decreasing(std::span<const Spot> values) {
  std::vector<bool> seen(values.size() / 2 + 2, false);
  Spot expected = static_cast<Spot>(values.size() / 2);
  for (auto v : values) {
    if (v >= seen.size()) return false;
    if (!seen[v]) {
      seen[v] = true;
      continue;
    }
    if (v != expected) return false;
    --expected;
  }
  return expected == 0;
}

inline bool is_extremely_lucky(const StirlingWord& w) { return second_occurrences_decreasing(w.values()); }

/// Lucky(w) = {1}.
inline bool is_extremely_unlucky(const StirlingWord& w) { return lucky_count(w) == 1; }

struct Filter {
  enum class Kind { all, extremely_lucky, extremely_unlucky, lucky_count, lucky_set, rank_range };

  Kind kind = Kind::all;
  unsigned count = 0;              // lucky_count
  LuckySet set;                    // lucky_set
  std::optional<RankRange> range;  // bounds decoding; applies to every kind

  static Filter all() { return {}; }
  static Filter extremely_lucky() { return {Kind::extremely_lucky, 0, {}, {}}; }
  static Filter extremely_unlucky() { return {Kind::extremely_unlucky, 0, {}, {}}; }
  static Filter with_lucky_count(unsigned k) { return {Kind::lucky_count, k, {}, {}}; }
  static Filter with_lucky_set(LuckySet s) { return {Kind::lucky_set, 0, std::move(s), {}}; }
  static Filter ranks(std::uint64_t begin, std::uint64_t end) {
    return {Kind::rank_range, 0, {}, RankRange{begin, end}};
  }
};

/// Pull-based filtered stream over Q_n in increasing rank order.
class WordStream {
 public:
  WordStream(unsigned n, Filter filter) : filter_(validated(n, std::move(filter))), cursor_(n, effective_range(n, filter_)) {}

  /// Advances to the next accepted word.
  bool next() {
    while (cursor_.next()) {
      if (accept()) return true;
    }
    return false;
  }

  std::uint64_t rank() const noexcept { return cursor_.rank(); }
  StirlingWord word() const { return cursor_.word(); }
  std::span<const Spot> values() const noexcept { return cursor_.values(); }

  struct Item {
    std::uint64_t rank;
    StirlingWord word;
  };

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Item;
    using difference_type = std::ptrdiff_t;
    using pointer = const Item*;
    using reference = const Item&;

    iterator() = default;
    explicit iterator(WordStream* s) : stream_(s) { advance(); }

    reference operator*() const { return item_; }
    pointer operator->() const { return &item_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    bool operator==(std::default_sentinel_t) const { return stream_ == nullptr; }

   private:
    void advance() {
      if (stream_ && stream_->next()) {
        item_ = {stream_->rank(), stream_->word()};
      } else {
        stream_ = nullptr;
      }
    }
    WordStream* stream_ = nullptr;
    Item item_{};
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() { return {}; }

 private:
  static Filter validated(unsigned n, Filter f) {
    if (f.kind == Filter::Kind::lucky_count && (f.count < 1 || f.count > n)) {
      throw InvalidFilter("lucky count " + std::to_string(f.count) + " outside [1, " + std::to_string(n) + "]");
    }
    if (f.kind == Filter::Kind::lucky_set) {
      if (f.set.empty()) throw InvalidFilter("lucky set filter needs a nonempty set");
      if (f.set.members().back() > 2 * n) {
        throw InvalidFilter("lucky set member " + std::to_string(f.set.members().back()) + " exceeds 2n");
      }
    }
    if (f.range && (f.range->begin > f.range->end || f.range->end > stirling_count(n))) {
      throw InvalidFilter("rank range [" + std::to_string(f.range->begin) + ", " + std::to_string(f.range->end) +
                          ") outside [0, " + std::to_string(stirling_count(n)) + "]");
    }
    return f;
  }

  static RankRange effective_range(unsigned n, const Filter& f) { return f.range ? *f.range : RankRange::full(n); }

  bool accept() {
    switch (filter_.kind) {
      case Filter::Kind::all:
      case Filter::Kind::rank_range:
        return true;
      case Filter::Kind::extremely_lucky: {
        const bool structural = second_occurrences_decreasing(cursor_.values());
        run_.run(cursor_.values());
        const bool by_count = run_.lucky_count() == cursor_.order();
        if (structural != by_count) {
          throw std::logic_error("extremely-lucky predicates disagree at rank " + std::to_string(cursor_.rank()));
        }
        return structural;
      }
      case Filter::Kind::extremely_unlucky:
        run_.run(cursor_.values());
        return run_.lucky_count() == 1;
      case Filter::Kind::lucky_count:
        run_.run(cursor_.values());
        return run_.lucky_count() == filter_.count;
      case Filter::Kind::lucky_set:
        run_.run(cursor_.values());
        return run_.lucky_count() == filter_.set.size() && run_.lucky_set() == filter_.set;
    }
    return false;
  }

  Filter filter_;
  WordCursor cursor_;
  ParkingRun<> run_;
};

inline WordStream enumerate(unsigned n, Filter filter = Filter::all()) { return WordStream(n, std::move(filter)); }

/// Materializes a stream; convenient for small orders.
inline std::vector<StirlingWord> collect(unsigned n, Filter filter = Filter::all()) {
  std::vector<StirlingWord> out;
  for (const auto& item : enumerate(n, std::move(filter))) out.push_back(item.word);
  return out;
}

/// Default bound for walks over [n]^n.
inline constexpr unsigned default_parking_function_bound = 7;

/// Lexicographic walk over [n]^n keeping only parking functions.
class ParkingFunctionStream {
 public:
  explicit ParkingFunctionStream(unsigned n, unsigned bound = default_parking_function_bound) : n_(n) {
    if (n > bound) {
      throw BoundExceeded("parking-function length " + std::to_string(n) + " exceeds bound " + std::to_string(bound));
    }
  }

  bool next() {
    for (;;) {
      if (!step()) return false;
      if (is_parking_function(current_)) return true;
    }
  }

  std::span<const Spot> values() const noexcept { return current_; }
  PreferenceWord word() const { return PreferenceWord(current_); }

 private:
  bool step() {
    if (!started_) {
      started_ = true;
      current_.assign(n_, 1);
      return true;
    }
    for (std::size_t i = n_; i-- > 0;) {
      if (current_[i] < n_) {
        ++current_[i];
        return true;
      }
      current_[i] = 1;
    }
    return false;
  }

  unsigned n_;
  bool started_ = false;
  std::vector<Spot> current_;
};

inline ParkingFunctionStream enumerate_parking_functions(unsigned n, unsigned bound = default_parking_function_bound) {
  return ParkingFunctionStream(n, bound);
}

}  // namespace stirling
