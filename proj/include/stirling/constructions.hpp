#pragma once

// Explicit constructions: the extremely unlucky builder, the parenthesization
// bijection for extremely lucky words, reconstruction of an extremely lucky
// word from its displacement composition, and admissibility witnesses.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/errors.hpp"
#include "stirling/integer.hpp"
#include "stirling/word.hpp"

namespace stirling {

/// Choices t_n, ..., t_2 with t_x in [1, x-1]. t_x picks the t_x-th smallest
/// element of nomax(candidates), where candidates = [x+1, 2n] minus the
/// positions already taken by larger values.
class UnluckyChoiceCode {
 public:
  UnluckyChoiceCode() = default;

  /// `choices` lists t_n first and t_2 last.
  UnluckyChoiceCode(unsigned order, std::vector<std::uint32_t> choices) : order_(order) {
    const std::size_t expected = order > 1 ? order - 1 : 0;
    if (choices.size() != expected) {
      throw ConstructionError(ConstructionError::Kind::invalid_code,
                              "order " + std::to_string(order) + " needs " + std::to_string(expected) +
                                  " choices, got " + std::to_string(choices.size()));
    }
    choices_.assign(expected, 0);
    for (std::size_t j = 0; j < choices.size(); ++j) {
      const unsigned x = order - static_cast<unsigned>(j);
      if (choices[j] < 1 || choices[j] > x - 1) {
        throw ConstructionError(ConstructionError::Kind::invalid_code,
                                "choice t_" + std::to_string(x) + " = " + std::to_string(choices[j]) +
                                    " outside [1, " + std::to_string(x - 1) + "]");
      }
      choices_[x - 2] = choices[j];
    }
  }

  /// Mixed-radix decoding of idx in [0, (n-1)!), t_n varying fastest.
  static UnluckyChoiceCode from_index(unsigned order, std::uint64_t idx) {
    if (idx >= factorial(order > 0 ? order - 1 : 0)) {
      throw ConstructionError(ConstructionError::Kind::invalid_code,
                              "code index " + std::to_string(idx) + " out of range");
    }
    std::vector<std::uint32_t> choices;
    for (unsigned x = order; x >= 2; --x) {
      choices.push_back(static_cast<std::uint32_t>(idx % (x - 1)) + 1);
      idx /= (x - 1);
    }
    return UnluckyChoiceCode(order, std::move(choices));
  }

  unsigned order() const noexcept { return order_; }
  std::uint32_t choice(unsigned x) const { return choices_.at(x - 2); }

  /// t_n, ..., t_2.
  std::vector<std::uint32_t> choices() const { return {choices_.rbegin(), choices_.rend()}; }

 private:
  unsigned order_ = 0;
  std::vector<std::uint32_t> choices_;  // choices_[x-2] = t_x
};

/// Places the copies of n, n-1, ..., 2 as the chosen position i_x and the next
/// free candidate after it, then 1 1 in front. Lucky(result) = {1}.
inline StirlingWord build_extremely_unlucky(const UnluckyChoiceCode& code) {
  const unsigned n = code.order();
  if (n == 0) return StirlingWord{};
  const std::size_t len = 2 * static_cast<std::size_t>(n);
  std::vector<Spot> w(len + 1, 0);  // 1-based positions
  for (unsigned x = n; x >= 2; --x) {
    std::vector<std::size_t> candidates;
    for (std::size_t p = x + 1; p <= len; ++p) {
      if (w[p] == 0) candidates.push_back(p);
    }
    // |candidates| = x by counting; the largest one is excluded from the choice.
    const std::size_t t = code.choice(x);
    if (candidates.size() < 2 || t > candidates.size() - 1) {
      throw ConstructionError(ConstructionError::Kind::invalid_code,
                              "no candidate position for value " + std::to_string(x));
    }
    const std::size_t left = candidates[t - 1];
    const std::size_t right = candidates[t];
    w[left] = x;
    w[right] = x;
  }
  w[1] = 1;
  w[2] = 1;
  return validate_stirling(PreferenceWord(std::vector<Spot>(w.begin() + 1, w.end())));
}

/// The corollary criterion: for all x in [2, n], w(i) < x for every i <= x.
inline bool meets_unlucky_prefix_criterion(const StirlingWord& w) {
  const unsigned n = w.order();
  for (unsigned x = 2; x <= n; ++x) {
    for (Car i = 1; i <= x; ++i) {
      if (w(i) >= x) return false;
    }
  }
  return true;
}

/// A balanced string over '(' and ')'.
class ParenString {
 public:
  ParenString() = default;

  /// Accepts '(' and ')' with optional whitespace between them.
  static ParenString parse(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (c == '(' || c == ')') {
        s += c;
      } else if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
        throw ParseError(std::string("unexpected character '") + c + "' in parenthesization");
      }
    }
    return ParenString(std::move(s));
  }

  explicit ParenString(std::string symbols) : symbols_(std::move(symbols)) {
    long depth = 0;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const char c = symbols_[i];
      if (c != '(' && c != ')') {
        throw ParseError(std::string("unexpected character '") + c + "' in parenthesization");
      }
      depth += c == '(' ? 1 : -1;
      if (depth < 0) {
        throw ConstructionError(ConstructionError::Kind::unbalanced,
                                "unmatched ')' at position " + std::to_string(i + 1));
      }
    }
    if (depth != 0) {
      throw ConstructionError(ConstructionError::Kind::unbalanced, std::to_string(depth) + " unmatched '('");
    }
  }

  std::size_t pairs() const noexcept { return symbols_.size() / 2; }
  const std::string& str() const noexcept { return symbols_; }

  auto operator<=>(const ParenString&) const = default;

 private:
  std::string symbols_;
};

/// All balanced strings with n pairs, in lexicographic order ('(' < ')').
inline std::vector<ParenString> all_paren_strings(unsigned n) {
  std::vector<ParenString> out;
  std::string cur;
  auto rec = [&](auto&& self, unsigned open, unsigned close) -> void {
    if (open == n && close == n) {
      out.emplace_back(cur);
      return;
    }
    if (open < n) {
      cur.push_back('(');
      self(self, open + 1, close);
      cur.pop_back();
    }
    if (close < open) {
      cur.push_back(')');
      self(self, open, close + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Close symbols receive n, ..., 1 left to right; each open symbol takes the
/// value of its partner.
inline StirlingWord parens_to_extremely_lucky(const ParenString& p) {
  const auto& s = p.str();
  const auto n = static_cast<Spot>(p.pairs());
  std::vector<Spot> w(s.size(), 0);
  std::vector<std::size_t> open;
  Spot next = n;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      open.push_back(i);
    } else {
      w[i] = next;
      w[open.back()] = next;
      open.pop_back();
      --next;
    }
  }
  return StirlingWord(detail::unchecked, n, std::move(w));
}

/// First occurrences become '(' and second occurrences ')'. Balanced for any
/// Stirling word.
inline ParenString stirling_to_parens(const StirlingWord& w) {
  std::vector<bool> seen(w.order() + 1, false);
  std::string s;
  s.reserve(w.size());
  for (auto v : w.values()) {
    s += seen[v] ? ')' : '(';
    seen[v] = true;
  }
  return ParenString(std::move(s));
}

/// Rebuilds the unique extremely lucky word with the given displacement
/// composition. The nonzero parts must read 1, 3, ..., 2n-1 with exactly n zeros.
inline StirlingWord extremely_lucky_from_disvec(const DisplacementComposition& m) {
  using Kind = ConstructionError::Kind;
  const auto parts = m.parts();
  if (parts.size() % 2 != 0) {
    throw ConstructionError(Kind::not_extremely_lucky_composition, "composition length is odd");
  }
  const auto n = static_cast<Spot>(parts.size() / 2);
  std::uint32_t expected = 1;
  std::size_t zeros = 0;
  for (auto d : parts) {
    if (d == 0) {
      ++zeros;
    } else if (d != expected) {
      throw ConstructionError(Kind::not_extremely_lucky_composition,
                              "nonzero part " + std::to_string(d) + " where " + std::to_string(expected) +
                                  " was expected");
    } else {
      expected += 2;
    }
  }
  if (zeros != n) {
    throw ConstructionError(Kind::not_extremely_lucky_composition,
                            std::to_string(zeros) + " zero parts, expected " + std::to_string(n));
  }

  std::vector<Spot> w(parts.size(), 0);
  std::vector<std::size_t> second(n + 1, 0);
  Spot next = n;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] != 0) {
      w[i] = next;
      second[next] = i;
      --next;
    }
  }
  for (Spot x = n; x >= 1; --x) {
    std::size_t p = second[x];
    bool placed = false;
    while (p-- > 0) {
      if (w[p] == 0) {
        w[p] = x;
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw ConstructionError(Kind::no_valid_placement,
                              "no free position left of the second " + std::to_string(x));
    }
  }

  StirlingWord result;
  try {
    result = validate_stirling(PreferenceWord(w));
  } catch (const ValidationError& e) {
    throw ConstructionError(Kind::no_valid_placement, std::string("placement is not a Stirling word: ") + e.what());
  }
  return result;
}

/// A word of order n with Lucky = {1, i}; needs i odd in [3, 2n-1] or i even in [2, n].
inline StirlingWord witness_two_element(unsigned n, unsigned i) {
  const bool odd_ok = n >= 1 && i % 2 == 1 && i >= 3 && i <= 2 * n - 1;
  const bool even_ok = i % 2 == 0 && i >= 2 && i <= n;
  if (!odd_ok && !even_ok) {
    throw ConstructionError(ConstructionError::Kind::not_admissible_pair,
                            "{1, " + std::to_string(i) + "} is not " + std::to_string(n) + "-admissible");
  }
  std::vector<Spot> w;
  auto pair = [&w](Spot v) { w.insert(w.end(), {v, v}); };
  if (odd_ok) {
    // 2 2 ... (k+1)(k+1) 1 1 (k+2)(k+2) ... n n
    const unsigned k = (i - 1) / 2;
    for (Spot v = 2; v <= k + 1; ++v) pair(v);
    pair(1);
    for (Spot v = k + 2; v <= n; ++v) pair(v);
  } else {
    // 1 1 ... (k-1)(k-1) k (2k)(2k) (k+1)(k+1) ... (2k-1)(2k-1) (2k+1)(2k+1) ... n n k
    const unsigned k = i / 2;
    for (Spot v = 1; v + 1 <= k; ++v) pair(v);
    w.push_back(k);
    pair(2 * k);
    for (Spot v = k + 1; v <= 2 * k - 1; ++v) pair(v);
    for (Spot v = 2 * k + 1; v <= n; ++v) pair(v);
    w.push_back(k);
  }
  return validate_stirling(PreferenceWord(std::move(w)));
}

enum class LiftMode { append, shift };

/// append: w (n+1)(n+1), same lucky set.
/// shift: (w+1) 1 1, lucky set gains 2n+1.
inline StirlingWord lift_admissible(const StirlingWord& w, LiftMode mode) {
  const unsigned n = w.order();
  std::vector<Spot> out;
  out.reserve(w.size() + 2);
  if (mode == LiftMode::append) {
    out.assign(w.values().begin(), w.values().end());
    out.insert(out.end(), {n + 1, n + 1});
  } else {
    for (auto v : w.values()) out.push_back(v + 1);
    out.insert(out.end(), {1, 1});
  }
  return StirlingWord(detail::unchecked, n + 1, std::move(out));
}

/// For even n = 2k >= 4:
/// 3 3 4 4 ... (k+1)(k+1) 1 (k+2)(k+2) ... (2k)(2k) 2 2 1, with Lucky = {1, n-1, 2n-2}.
inline StirlingWord witness_1_n1_2n2(unsigned n) {
  if (n % 2 != 0) {
    throw ConstructionError(ConstructionError::Kind::odd_order,
                            "{1, n-1, 2n-2} is only admissible for even n >= 4; got " + std::to_string(n));
  }
  if (n < 4) {
    throw ConstructionError(ConstructionError::Kind::order_out_of_range,
                            "construction needs n >= 4; got " + std::to_string(n));
  }
  const unsigned k = n / 2;
  std::vector<Spot> w;
  auto pair = [&w](Spot v) { w.insert(w.end(), {v, v}); };
  for (Spot v = 3; v <= k + 1; ++v) pair(v);
  w.push_back(1);
  for (Spot v = k + 2; v <= 2 * k; ++v) pair(v);
  pair(2);
  w.push_back(1);
  return validate_stirling(PreferenceWord(std::move(w)));
}

}  // namespace stirling
