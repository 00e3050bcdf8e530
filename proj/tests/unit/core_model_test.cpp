#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stirling/enumeration.hpp"
#include "stirling/parking.hpp"
#include "stirling/word.hpp"

using namespace stirling;

namespace {

PreferenceWord pw(std::initializer_list<Spot> v) { return PreferenceWord(v); }

template <class F>
ValidationError capture_validation(F&& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ValidationError";
  return ValidationError(ValidationError::Kind::zero_entry, 0, 0, "none");
}

}  // namespace

TEST(PreferenceWord, RejectsZeroEntry) {
  const auto e = capture_validation([] { pw({1, 0, 2}); });
  EXPECT_EQ(e.kind(), ValidationError::Kind::zero_entry);
}

TEST(PreferenceWord, OneBasedAccess) {
  const auto w = pw({3, 1, 2});
  EXPECT_EQ(w(1), 3u);
  EXPECT_EQ(w(3), 2u);
  EXPECT_THROW(w(4), std::out_of_range);
}

TEST(ValidateStirling, AcceptsNestedWord) {
  const auto w = validate_stirling(pw({1, 2, 3, 3, 2, 1}));
  EXPECT_EQ(w.order(), 3u);
  EXPECT_EQ(w.size(), 6u);
}

TEST(ValidateStirling, ReportsViolationWithOffendingValues) {
  const auto e = capture_validation([] { validate_stirling(pw({1, 2, 3, 2, 3, 1})); });
  EXPECT_EQ(e.kind(), ValidationError::Kind::stirling_violation);
  EXPECT_EQ(e.value(), 3u);
  EXPECT_EQ(e.inner(), 2u);
}

TEST(ValidateStirling, EmptyWordHasOrderZero) {
  const auto w = validate_stirling(PreferenceWord{});
  EXPECT_EQ(w.order(), 0u);
  EXPECT_TRUE(lucky_set(w).empty());
  EXPECT_EQ(total_displacement(w), 0u);
}

TEST(ValidateStirling, OddLength) {
  const auto e = capture_validation([] { validate_stirling(pw({1, 1, 2})); });
  EXPECT_EQ(e.kind(), ValidationError::Kind::odd_length);
}

TEST(ValidateStirling, WrongMultiset) {
  EXPECT_EQ(capture_validation([] { validate_stirling(pw({1, 1, 1, 2})); }).kind(),
            ValidationError::Kind::wrong_multiset);
  EXPECT_EQ(capture_validation([] { validate_stirling(pw({1, 1, 3, 3})); }).value(), 3u);
  const auto missing = capture_validation([] { validate_stirling(pw({1, 2, 2, 1, 1, 1})); });
  EXPECT_EQ(missing.kind(), ValidationError::Kind::wrong_multiset);
}

TEST(ValidateStirling, FirstViolationInScanOrder) {
  // 2 encloses 1 and 3 encloses 2; the scan meets the copies of 2 first.
  const auto e = capture_validation([] { validate_stirling(pw({2, 1, 3, 2, 1, 3})); });
  EXPECT_EQ(e.kind(), ValidationError::Kind::stirling_violation);
  EXPECT_EQ(e.value(), 2u);
  EXPECT_EQ(e.inner(), 1u);
}

TEST(ValidateStirling, AcceptsExactlyTheMultisetOracle) {
  for (unsigned n = 0; n <= 4; ++n) {
    oracle::Word w;
    for (unsigned v = 1; v <= n; ++v) w.insert(w.end(), {v, v});
    std::size_t accepted = 0;
    do {
      const bool mine = is_stirling(PreferenceWord(std::vector<Spot>(w.begin(), w.end())));
      EXPECT_EQ(mine, oracle::is_stirling(w));
      accepted += mine;
    } while (std::next_permutation(w.begin(), w.end()));
    EXPECT_EQ(accepted, oracle::odd_double_factorial(n)) << "n=" << n;
  }
}

TEST(IsParkingFunction, Examples) {
  EXPECT_TRUE(is_parking_function(pw({1, 3, 1, 5, 6, 3})));
  EXPECT_FALSE(is_parking_function(pw({2, 2, 3, 1, 6, 6})));
  for (std::size_t m = 0; m <= 9; ++m) {
    EXPECT_TRUE(is_parking_function(PreferenceWord(std::vector<Spot>(m, 1))));
  }
}

TEST(IsParkingFunction, AgreesWithSimulation) {
  for (unsigned m = 1; m <= 5; ++m) {
    std::vector<Spot> w(m, 1);
    for (;;) {
      const oracle::Word ow(w.begin(), w.end());
      EXPECT_EQ(is_parking_function(std::span<const Spot>(w)), oracle::park(ow).ok);
      std::size_t i = m;
      while (i > 0 && w[i - 1] == m) w[--i] = 1;
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

TEST(IsParkingFunction, EveryStirlingWordParks) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& w : collect(n)) EXPECT_TRUE(is_parking_function(w.word())) << format_word(w);
  }
}

TEST(ParseWord, SeparatedForms) {
  EXPECT_EQ(parse_word("3,3,1,4,4,2,2,1"), pw({3, 3, 1, 4, 4, 2, 2, 1}));
  EXPECT_EQ(parse_word(" 3 3, 1\t4 "), pw({3, 3, 1, 4}));
  EXPECT_EQ(parse_word("10,10,1,1"), pw({10, 10, 1, 1}));
  EXPECT_TRUE(parse_word("").empty());
}

TEST(ParseWord, CompactForm) {
  EXPECT_EQ(parse_word("33144221"), pw({3, 3, 1, 4, 4, 2, 2, 1}));
  EXPECT_EQ(parse_word("7"), pw({7}));
  EXPECT_NO_THROW(parse_word("112233445566778899"));
  EXPECT_THROW(parse_word("11223344556677889910"), ParseError);
}

TEST(ParseWord, Rejections) {
  EXPECT_THROW(parse_word("1,0,1"), ParseError);
  EXPECT_THROW(parse_word("1,x"), ParseError);
  EXPECT_THROW(parse_word("1a22"), ParseError);
  EXPECT_THROW(parse_word("1,-1"), ParseError);
}

TEST(FormatWord, CanonicalAndCompact) {
  const auto w = validate_stirling(pw({3, 3, 1, 4, 4, 2, 2, 1}));
  EXPECT_EQ(format_word(w), "3,3,1,4,4,2,2,1");
  EXPECT_EQ(compact_word(w), "33144221");
  EXPECT_EQ(validate_stirling(parse_word(format_word(w))), w);
}

TEST(LuckySet, SortedUniqueMembers) {
  const LuckySet s{6, 1, 3, 3};
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(std::vector<Car>(s.members().begin(), s.members().end()), (std::vector<Car>{1, 3, 6}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
  EXPECT_EQ(s.second_smallest(), 3u);
  EXPECT_EQ(LuckySet{1}.second_smallest(), 0u);
  EXPECT_EQ(s.with(9), (LuckySet{1, 3, 6, 9}));
  EXPECT_LT((LuckySet{1, 2}), (LuckySet{1, 3}));
}

TEST(DisplacementComposition, Counts) {
  const DisplacementComposition d{0, 1, 1, 0, 1, 4, 4, 5};
  EXPECT_EQ(d.sum(), 16u);
  EXPECT_EQ(d.nonzero_parts(), 6u);
  EXPECT_EQ(d.zero_parts(), 2u);
  EXPECT_EQ(d(6), 4u);
}
