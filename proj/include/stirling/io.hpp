#pragma once

// Serialization: JSON objects, CSV rows and the plain-text table renderings
// used by the CLI and the golden-table checks. All orderings are deterministic.

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "stirling/census.hpp"
#include "stirling/enumeration.hpp"
#include "stirling/parking.hpp"
#include "stirling/statistics.hpp"
#include "stirling/word.hpp"

namespace stirling::io {

using json = nlohmann::ordered_json;

template <class Range>
json to_json_array(const Range& values) {
  json arr = json::array();
  for (auto v : values) arr.push_back(v);
  return arr;
}

/// {"word": [...], "spots": [...], "lucky": [...], "disvec": [...], "total": t}
inline json outcome_json(const PreferenceWord& word, const ParkingOutcome& outcome) {
  json j;
  j["word"] = to_json_array(word.values());
  j["spots"] = to_json_array(outcome.spots);
  j["lucky"] = to_json_array(outcome.lucky.members());
  j["disvec"] = to_json_array(outcome.disvec.parts());
  j["total"] = outcome.total;
  return j;
}

/// {"n": n, "coeffs": {"1": a_1, ...}}
inline json coefficients_json(unsigned n, const CoefficientVector& p) {
  json coeffs = json::object();
  for (unsigned k = 1; k <= p.degree_bound(); ++k) coeffs[std::to_string(k)] = p.at(k);
  json j;
  j["n"] = n;
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline std::string coefficients_csv(const CoefficientVector& p) {
  std::string out = "k,count\n";
  for (unsigned k = 1; k <= p.degree_bound(); ++k) {
    out += std::to_string(k) + "," + std::to_string(p.at(k)) + "\n";
  }
  return out;
}

/// "{1,3,6}"
inline std::string format_set(const LuckySet& s) { return "{" + format_values(s.members()) + "}"; }

/// "{1, 3, 6}"
inline std::string format_set_spaced(const LuckySet& s) {
  std::string out = "{";
  bool first = true;
  for (auto m : s.members()) {
    if (!first) out += ", ";
    out += std::to_string(m);
    first = false;
  }
  return out + "}";
}

inline std::string csv_quoted(const std::string& s) { return "\"" + s + "\""; }

/// Sets grouped by size, lexicographic within a size.
inline std::vector<std::pair<LuckySet, AdmissibleFamily::Entry>> ordered_sets(const AdmissibleFamily& family,
                                                                               std::size_t only_size = 0) {
  std::vector<std::pair<LuckySet, AdmissibleFamily::Entry>> rows(family.sets.begin(), family.sets.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  if (only_size != 0) {
    std::erase_if(rows, [only_size](const auto& r) { return r.first.size() != only_size; });
  }
  return rows;
}

inline std::string admissible_csv(const CensusTable<AdmissibleFamily>& table, std::size_t only_size = 0) {
  std::string out = "size,lucky_set,count,witness_rank,witness\n";
  for (const auto& [set, entry] : ordered_sets(table.payload, only_size)) {
    out += std::to_string(set.size()) + "," + csv_quoted(format_values(set.members())) + "," +
           std::to_string(entry.count) + "," + std::to_string(entry.witness_rank) + "," +
           csv_quoted(format_word(unrank(table.order, entry.witness_rank))) + "\n";
  }
  return out;
}

inline json admissible_json(const CensusTable<AdmissibleFamily>& table, std::size_t only_size = 0) {
  json sets = json::array();
  for (const auto& [set, entry] : ordered_sets(table.payload, only_size)) {
    json row;
    row["size"] = set.size();
    row["set"] = to_json_array(set.members());
    row["count"] = entry.count;
    row["witness_rank"] = entry.witness_rank;
    row["witness"] = to_json_array(unrank(table.order, entry.witness_rank).values());
    sets.push_back(std::move(row));
  }
  json j;
  j["kind"] = to_string(table.kind);
  j["n"] = table.order;
  j["scanned"] = table.scanned;
  j["sets"] = std::move(sets);
  return j;
}

/// Plain-text table: a "# size k" header per size, then one "{a, b, ...}" per line.
inline std::string render_admissible_table(const AdmissibleFamily& family) {
  std::string out;
  std::size_t current = 0;
  for (const auto& [set, entry] : ordered_sets(family)) {
    if (set.size() != current) {
      current = set.size();
      out += "# size " + std::to_string(current) + "\n";
    }
    out += format_set_spaced(set) + "\n";
  }
  return out;
}

/// Word text for tables: compact digits when every value is a single digit.
inline std::string table_word(const StirlingWord& w) { return w.order() <= 9 ? compact_word(w) : format_word(w); }

inline std::string format_disvec(const DisplacementComposition& d) { return "(" + format_values(d.parts()) + ")"; }

inline std::string displacement_csv(const CensusTable<DisplacementFibers>& table) {
  std::string out = "nonzero_parts,disvec,count,witness,fiber\n";
  for (const auto& [composition, ranks] : table.payload.fibers) {
    std::string fiber;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      if (i) fiber += ";";
      fiber += format_word(unrank(table.order, ranks[i]));
    }
    out += std::to_string(composition.nonzero_parts()) + "," + csv_quoted(format_values(composition.parts())) + "," +
           std::to_string(ranks.size()) + "," + csv_quoted(format_word(unrank(table.order, ranks.front()))) + "," +
           csv_quoted(fiber) + "\n";
  }
  return out;
}

/// Histogram over k in [n, 2n-1] nonzero parts (the feasible range), as CSV.
inline std::string histogram_csv(const CensusTable<DisplacementFibers>& table) {
  const auto h = table.payload.nonzero_part_histogram(table.order);
  std::string out = "nonzero_parts,words,compositions\n";
  std::vector<std::uint64_t> compositions(h.size(), 0);
  for (const auto& [composition, ranks] : table.payload.fibers) ++compositions[composition.nonzero_parts()];
  const unsigned n = table.order;
  for (unsigned k = n; k + 1 <= 2 * n; ++k) {
    out += std::to_string(k) + "," + std::to_string(h[k]) + "," + std::to_string(compositions[k]) + "\n";
  }
  return out;
}

inline json displacement_json(const CensusTable<DisplacementFibers>& table) {
  json compositions = json::array();
  for (const auto& [composition, ranks] : table.payload.fibers) {
    json row;
    row["disvec"] = to_json_array(composition.parts());
    row["nonzero_parts"] = composition.nonzero_parts();
    row["count"] = ranks.size();
    json fiber = json::array();
    for (auto r : ranks) fiber.push_back(to_json_array(unrank(table.order, r).values()));
    row["fiber"] = std::move(fiber);
    compositions.push_back(std::move(row));
  }
  const auto h = table.payload.nonzero_part_histogram(table.order);
  json histogram = json::object();
  for (unsigned k = table.order; k + 1 <= 2 * table.order; ++k) histogram[std::to_string(k)] = h[k];
  json j;
  j["kind"] = to_string(table.kind);
  j["n"] = table.order;
  j["scanned"] = table.scanned;
  j["compositions"] = std::move(compositions);
  j["histogram"] = std::move(histogram);
  return j;
}

/// One "k | word | (d_1,...,d_2n)" line per word, sorted by (k, word) where k
/// is the number of nonzero parts.
inline std::string render_displacement_table(const CensusTable<DisplacementFibers>& table) {
  std::vector<std::tuple<std::size_t, std::string, std::string>> rows;
  for (const auto& [composition, ranks] : table.payload.fibers) {
    for (auto r : ranks) {
      rows.emplace_back(composition.nonzero_parts(), table_word(unrank(table.order, r)), format_disvec(composition));
    }
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [k, word, disvec] : rows) out += std::to_string(k) + " | " + word + " | " + disvec + "\n";
  return out;
}

/// "T_n(q) = <paper-style polynomial>"
inline std::string render_polynomial_row(unsigned n, const CoefficientVector& p) {
  return "T_" + std::to_string(n) + "(q) = " + render_paper_style(p) + "\n";
}

inline json gessel_seo_json(unsigned n, const GesselSeoCheck& check) {
  json j;
  j["n"] = n;
  j["parking_functions"] = check.parking_functions;
  j["computed"] = coefficients_json(n, check.computed)["coeffs"];
  j["closed_form"] = coefficients_json(n, check.closed_form)["coeffs"];
  j["equal"] = check.equal;
  return j;
}

inline std::string gessel_seo_csv(const GesselSeoCheck& check) {
  std::string out = "k,computed,closed_form\n";
  const unsigned top = std::max(check.computed.degree_bound(), check.closed_form.degree_bound());
  for (unsigned k = 1; k <= top; ++k) {
    out += std::to_string(k) + "," + std::to_string(check.computed.at(k)) + "," +
           std::to_string(check.closed_form.at(k)) + "\n";
  }
  return out;
}

}  // namespace stirling::io
