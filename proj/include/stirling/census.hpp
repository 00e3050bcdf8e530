#pragma once

// Exhaustive scans of Q_n aggregated into mergeable census tables. A scan
// over [0, (2n-1)!!) may be split into disjoint rank ranges, scanned
// independently and merged; merge is associative and commutative.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <exception>
#include <future>
#include <iterator>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stirling/enumeration.hpp"
#include "stirling/integer.hpp"
#include "stirling/parking.hpp"
#include "stirling/word.hpp"

namespace stirling {

enum class CensusKind { lucky_polynomial, admissible_sets, disp_fibers, zero_part_histogram };

inline const char* to_string(CensusKind kind) {
  switch (kind) {
    case CensusKind::lucky_polynomial: return "lucky-polynomial";
    case CensusKind::admissible_sets: return "admissible-sets";
    case CensusKind::disp_fibers: return "disp-fibers";
    case CensusKind::zero_part_histogram: return "zero-part-histogram";
  }
  return "unknown";
}

/// What a payload sees for each scanned word.
struct ScanItem {
  std::uint64_t rank;
  std::span<const Spot> word;
  const ParkingRun<>& parking;
};

template <class P>
concept CensusPayload = requires(P p, const P& other, const ScanItem& item, unsigned n) {
  { P::kind } -> std::convertible_to<CensusKind>;
  p.reset(n);
  p.add(item);
  p.merge(other);
};

/// Coefficients a_0..a_n of sum_w q^{lucky(w)}.
struct LuckyCounts {
  static constexpr CensusKind kind = CensusKind::lucky_polynomial;
  std::vector<std::uint64_t> counts;

  void reset(unsigned n) { counts.assign(n + 1, 0); }
  void add(const ScanItem& item) { ++counts[item.parking.lucky_count()]; }
  void merge(const LuckyCounts& other) {
    if (counts.size() < other.counts.size()) counts.resize(other.counts.size(), 0);
    for (std::size_t k = 0; k < other.counts.size(); ++k) counts[k] = checked_add(counts[k], other.counts[k]);
  }
  bool operator==(const LuckyCounts&) const = default;
};

/// Number of words per count of nonzero displacement parts (index 0..2n).
struct ZeroPartHistogram {
  static constexpr CensusKind kind = CensusKind::zero_part_histogram;
  std::vector<std::uint64_t> by_nonzero_parts;

  void reset(unsigned n) { by_nonzero_parts.assign(2 * n + 1, 0); }
  void add(const ScanItem& item) { ++by_nonzero_parts[item.word.size() - item.parking.lucky_count()]; }
  void merge(const ZeroPartHistogram& other) {
    if (by_nonzero_parts.size() < other.by_nonzero_parts.size()) {
      by_nonzero_parts.resize(other.by_nonzero_parts.size(), 0);
    }
    for (std::size_t k = 0; k < other.by_nonzero_parts.size(); ++k) {
      by_nonzero_parts[k] = checked_add(by_nonzero_parts[k], other.by_nonzero_parts[k]);
    }
  }
  bool operator==(const ZeroPartHistogram&) const = default;
};

/// The family {Lucky(w)} with a count and the minimal-rank witness per set.
struct AdmissibleFamily {
  static constexpr CensusKind kind = CensusKind::admissible_sets;

  struct Entry {
    std::uint64_t count = 0;
    std::uint64_t witness_rank = 0;
    bool operator==(const Entry&) const = default;
  };
  std::map<LuckySet, Entry> sets;

  void reset(unsigned) { sets.clear(); }
  void add(const ScanItem& item) {
    auto [it, inserted] = sets.try_emplace(item.parking.lucky_set(), Entry{0, item.rank});
    ++it->second.count;
    if (item.rank < it->second.witness_rank) it->second.witness_rank = item.rank;
  }
  void merge(const AdmissibleFamily& other) {
    for (const auto& [set, entry] : other.sets) {
      auto [it, inserted] = sets.try_emplace(set, entry);
      if (inserted) continue;
      it->second.count = checked_add(it->second.count, entry.count);
      it->second.witness_rank = std::min(it->second.witness_rank, entry.witness_rank);
    }
  }
  bool contains(const LuckySet& s) const { return sets.contains(s); }

  /// Sets of the given size, in lexicographic order.
  std::vector<LuckySet> of_size(std::size_t size) const {
    std::vector<LuckySet> out;
    for (const auto& [set, entry] : sets) {
      if (set.size() == size) out.push_back(set);
    }
    return out;
  }

  bool operator==(const AdmissibleFamily&) const = default;
};

/// Fibers of w -> disvec(w): each composition with the sorted ranks mapping to it.
struct DisplacementFibers {
  static constexpr CensusKind kind = CensusKind::disp_fibers;
  std::map<DisplacementComposition, std::vector<std::uint64_t>> fibers;

  void reset(unsigned) { fibers.clear(); }
  void add(const ScanItem& item) {
    const auto d = item.parking.displacement();
    fibers[DisplacementComposition(std::vector<std::uint32_t>(d.begin(), d.end()))].push_back(item.rank);
  }
  void merge(const DisplacementFibers& other) {
    for (const auto& [composition, ranks] : other.fibers) {
      auto& mine = fibers[composition];
      std::vector<std::uint64_t> merged;
      merged.reserve(mine.size() + ranks.size());
      std::merge(mine.begin(), mine.end(), ranks.begin(), ranks.end(), std::back_inserter(merged));
      mine = std::move(merged);
    }
  }

  /// Words per number of nonzero parts (index 0..2n).
  std::vector<std::uint64_t> nonzero_part_histogram(unsigned n) const {
    std::vector<std::uint64_t> h(2 * n + 1, 0);
    for (const auto& [composition, ranks] : fibers) {
      h[composition.nonzero_parts()] = checked_add(h[composition.nonzero_parts()], ranks.size());
    }
    return h;
  }

  bool operator==(const DisplacementFibers&) const = default;
};

template <CensusPayload Payload>
struct CensusTable {
  unsigned order = 0;
  std::uint64_t scanned = 0;
  Payload payload;

  static constexpr CensusKind kind = Payload::kind;

  void merge(const CensusTable& other) {
    if (other.order != order) {
      throw std::invalid_argument("cannot merge census tables of orders " + std::to_string(order) + " and " +
                                  std::to_string(other.order));
    }
    scanned = checked_add(scanned, other.scanned);
    payload.merge(other.payload);
  }

  bool operator==(const CensusTable&) const = default;
};

struct ScanOptions {
  unsigned jobs = 1;
  unsigned max_order = default_max_order;
};

inline void check_scan_bound(unsigned n, const ScanOptions& options) {
  if (n > options.max_order) {
    throw BoundExceeded("order " + std::to_string(n) + " exceeds the exhaustive-scan ceiling " +
                        std::to_string(options.max_order) + " (|Q_" + std::to_string(n) + "| = " +
                        std::to_string(stirling_count(n)) + ")");
  }
  if (n > max_rankable_order) {
    throw BoundExceeded("order " + std::to_string(n) + " exceeds the 64-bit rank space");
  }
}

/// Scans one rank range sequentially.
template <CensusPayload Payload>
CensusTable<Payload> scan_range(unsigned n, RankRange range) {
  CensusTable<Payload> table;
  table.order = n;
  table.payload.reset(n);
  WordCursor cursor(n, range);
  ParkingRun<> run;
  while (cursor.next()) {
    run.run(cursor.values());
    table.payload.add(ScanItem{cursor.rank(), cursor.values(), run});
    ++table.scanned;
  }
  return table;
}

/// Scans `range` split into `options.jobs` contiguous parts, merged in order.
/// The result does not depend on the number of jobs.
template <CensusPayload Payload>
CensusTable<Payload> scan(unsigned n, RankRange range, const ScanOptions& options = {}) {
  check_scan_bound(n, options);
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) return scan_range<Payload>(n, range);

  std::vector<std::future<CensusTable<Payload>>> parts;
  for (const auto& part : partition_ranks(range, jobs)) {
    parts.push_back(std::async(std::launch::async, [n, part] { return scan_range<Payload>(n, part); }));
  }
  CensusTable<Payload> total;
  total.order = n;
  total.payload.reset(n);
  for (auto& f : parts) total.merge(f.get());
  return total;
}

template <CensusPayload Payload>
CensusTable<Payload> scan(unsigned n, const ScanOptions& options = {}) {
  check_scan_bound(n, options);
  return scan<Payload>(n, RankRange::full(n), options);
}

/// {Lucky(w) : w in Q_n} with minimal-rank witnesses.
inline CensusTable<AdmissibleFamily> admissible_sets(unsigned n, const ScanOptions& options = {}) {
  if (n < 1) throw std::invalid_argument("admissible_sets requires n >= 1");
  return scan<AdmissibleFamily>(n, options);
}

/// Fibers of the displacement-composition map over Q_n.
inline CensusTable<DisplacementFibers> displacement_census(unsigned n, const ScanOptions& options = {}) {
  if (n < 1) throw std::invalid_argument("displacement_census requires n >= 1");
  return scan<DisplacementFibers>(n, options);
}

inline CensusTable<ZeroPartHistogram> zero_part_histogram(unsigned n, const ScanOptions& options = {}) {
  return scan<ZeroPartHistogram>(n, options);
}

}  // namespace stirling
