#pragma once

// Brute-force reference implementations used only by the tests. They share no
// code with the library: words are plain vectors, parking uses a std::set of
// taken spots, and Stirling words come from filtering multiset permutations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<unsigned>;

/// Two copies of each of 1..n, and everything between the copies of v is larger than v.
inline bool is_stirling(const Word& w) {
  if (w.size() % 2 != 0) return false;
  const unsigned n = static_cast<unsigned>(w.size() / 2);
  for (unsigned v = 1; v <= n; ++v) {
    std::vector<std::size_t> at;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (w[p] == v) at.push_back(p);
    }
    if (at.size() != 2) return false;
    for (std::size_t p = at[0] + 1; p < at[1]; ++p) {
      if (w[p] < v) return false;
    }
  }
  return true;
}

/// Q_n by filtering every arrangement of {1,1,...,n,n}; lexicographic order.
inline std::vector<Word> stirling_words(unsigned n) {
  Word w;
  for (unsigned v = 1; v <= n; ++v) w.insert(w.end(), {v, v});
  std::vector<Word> out;
  do {
    if (is_stirling(w)) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

struct Parked {
  bool ok = false;
  std::size_t failed_car = 0;  // 1-based, when !ok
  std::vector<unsigned> spots;
  std::vector<unsigned> displacement;
  std::vector<unsigned> lucky;  // 1-based cars
};

/// Each car walks right from its preference over a set of taken spots.
inline Parked park(const Word& prefs) {
  Parked r;
  const unsigned m = static_cast<unsigned>(prefs.size());
  std::set<unsigned> taken;
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    unsigned s = prefs[i];
    while (s <= m && taken.count(s)) ++s;
    if (s < 1 || s > m) {
      r.failed_car = i + 1;
      return r;
    }
    taken.insert(s);
    r.spots.push_back(s);
    r.displacement.push_back(s - prefs[i]);
    if (s == prefs[i]) r.lucky.push_back(static_cast<unsigned>(i + 1));
  }
  r.ok = true;
  return r;
}

/// Every word in [n]^n that parks, in lexicographic order.
inline std::vector<Word> parking_functions(unsigned n) {
  std::vector<Word> out;
  Word w(n, 1);
  if (n == 0) return {Word{}};
  for (;;) {
    if (park(w).ok) out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == n) w[--i] = 1;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

/// Catalan numbers by the convolution recurrence.
inline std::vector<std::uint64_t> catalan_table(unsigned up_to) {
  std::vector<std::uint64_t> c(up_to + 1, 0);
  c[0] = 1;
  for (unsigned m = 1; m <= up_to; ++m) {
    for (unsigned i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  }
  return c;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline std::uint64_t odd_double_factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned i = 1; i < 2 * n; i += 2) f *= i;
  return f;
}

/// lucky-count -> number of words, over a list of words that all park.
inline std::map<std::size_t, std::uint64_t> lucky_distribution(const std::vector<Word>& words) {
  std::map<std::size_t, std::uint64_t> d;
  for (const auto& w : words) ++d[park(w).lucky.size()];
  return d;
}

/// {Lucky(w) : w in Q_n}.
inline std::set<std::vector<unsigned>> admissible_sets(unsigned n) {
  std::set<std::vector<unsigned>> out;
  for (const auto& w : stirling_words(n)) out.insert(park(w).lucky);
  return out;
}

}  // namespace oracle
