#pragma once

// The parking process: car i tries its preferred spot and otherwise takes the
// first free spot further down the street.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stirling/errors.hpp"
#include "stirling/word.hpp"

namespace stirling {

/// Successor structure over spots 1..m answering "first free spot >= s".
/// Occupied spots point past themselves; lookups compress paths by halving.
class NextFreeIndex {
 public:
  explicit NextFreeIndex(std::size_t spots) { reset(spots); }

  void reset(std::size_t spots) {
    spots_ = spots;
    free_ = spots;
    next_.resize(spots + 2);
    for (std::size_t s = 0; s < next_.size(); ++s) next_[s] = static_cast<Spot>(s);
  }

  /// Returns m + 1 when no spot >= s is free.
  Spot first_free_from(Spot s) {
    if (s > spots_ + 1) return static_cast<Spot>(spots_ + 1);
    while (next_[s] != s) {
      next_[s] = next_[next_[s]];
      s = next_[s];
    }
    return s;
  }

  /// Precondition: s is free and s <= m.
  void occupy(Spot s) {
    next_[s] = s + 1;
    --free_;
  }

  std::size_t free_count() const noexcept { return free_; }
  std::size_t spot_count() const noexcept { return spots_; }

 private:
  std::size_t spots_ = 0;
  std::size_t free_ = 0;
  std::vector<Spot> next_;
};

/// Naive linear probing with the same interface; the reference implementation
/// that NextFreeIndex is tested against.
class LinearProbeIndex {
 public:
  explicit LinearProbeIndex(std::size_t spots) { reset(spots); }

  void reset(std::size_t spots) {
    occupied_.assign(spots + 1, false);
    free_ = spots;
  }

  Spot first_free_from(Spot s) {
    const auto limit = occupied_.size();
    while (s < limit && occupied_[s]) ++s;
    return s < limit ? s : static_cast<Spot>(limit);
  }

  void occupy(Spot s) {
    occupied_[s] = true;
    --free_;
  }

  std::size_t free_count() const noexcept { return free_; }
  std::size_t spot_count() const noexcept { return occupied_.size() - 1; }

 private:
  std::vector<bool> occupied_;
  std::size_t free_ = 0;
};

/// Result of a successful parking run.
struct ParkingOutcome {
  std::vector<Spot> spots;  // p(1..m)
  LuckySet lucky;
  DisplacementComposition disvec;
  std::uint64_t total = 0;

  bool operator==(const ParkingOutcome&) const = default;
};

/// Reusable buffers for hot loops. `run` returns the 1-based index of the
/// first failing car, or 0 on success; spots/displacement are valid on success.
template <class FreeIndex = NextFreeIndex>
class ParkingRun {
 public:
  std::size_t run(std::span<const Spot> prefs) {
    const auto m = prefs.size();
    index_.reset(m);
    spots_.resize(m);
    disp_.resize(m);
    lucky_count_ = 0;
    out_of_range_ = false;
    for (std::size_t i = 0; i < m; ++i) {
      const Spot pref = prefs[i];
      if (pref < 1 || pref > m) {
        out_of_range_ = true;
        return i + 1;
      }
      const Spot s = index_.first_free_from(pref);
      if (s > m) return i + 1;
      index_.occupy(s);
      spots_[i] = s;
      disp_[i] = s - pref;
      if (s == pref) ++lucky_count_;
    }
    return 0;
  }

  std::span<const Spot> spots() const noexcept { return spots_; }
  std::span<const std::uint32_t> displacement() const noexcept { return disp_; }
  std::size_t lucky_count() const noexcept { return lucky_count_; }
  bool failed_out_of_range() const noexcept { return out_of_range_; }

  LuckySet lucky_set() const {
    std::vector<Car> members;
    members.reserve(lucky_count_);
    for (std::size_t i = 0; i < disp_.size(); ++i) {
      if (disp_[i] == 0) members.push_back(static_cast<Car>(i + 1));
    }
    return LuckySet(std::move(members));
  }

  ParkingOutcome outcome() const {
    ParkingOutcome out;
    out.spots = spots_;
    out.lucky = lucky_set();
    out.disvec = DisplacementComposition(disp_);
    out.total = out.disvec.sum();
    return out;
  }

 private:
  FreeIndex index_{0};
  std::vector<Spot> spots_;
  std::vector<std::uint32_t> disp_;
  std::size_t lucky_count_ = 0;
  bool out_of_range_ = false;
};

/// Parks the cars of an arbitrary preference word in index order.
/// Throws ParkFailure naming the first car that cannot park.
template <class FreeIndex = NextFreeIndex>
ParkingOutcome park(const PreferenceWord& word) {
  ParkingRun<FreeIndex> run;
  if (const auto car = run.run(word.values()); car != 0) {
    if (run.failed_out_of_range()) {
      throw ParkFailure(ParkFailure::Kind::preference_out_of_range, car,
                        "car " + std::to_string(car) + " prefers spot " + std::to_string(word(static_cast<Car>(car))) +
                            " outside [1, " + std::to_string(word.size()) + "]");
    }
    throw ParkFailure(ParkFailure::Kind::no_free_spot, car,
                      "car " + std::to_string(car) + " finds no free spot at or after " +
                          std::to_string(word(static_cast<Car>(car))));
  }
  return run.outcome();
}

template <class FreeIndex = NextFreeIndex>
ParkingOutcome park(const StirlingWord& w) {
  return park<FreeIndex>(w.word());
}

/// Lucky(w): the cars that park in their preferred spot.
inline LuckySet lucky_set(const StirlingWord& w) { return park(w).lucky; }

inline std::size_t lucky_count(const StirlingWord& w) { return lucky_set(w).size(); }

inline DisplacementComposition displacement_composition(const StirlingWord& w) { return park(w).disvec; }

/// d(w); always order^2 for Stirling words.
inline std::uint64_t total_displacement(const StirlingWord& w) { return park(w).total; }

}  // namespace stirling
