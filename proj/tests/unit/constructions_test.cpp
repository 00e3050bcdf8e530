#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "stirling/constructions.hpp"
#include "stirling/enumeration.hpp"
#include "stirling/parking.hpp"

using namespace stirling;

namespace {

StirlingWord sw(std::initializer_list<Spot> v) { return validate_stirling(PreferenceWord(v)); }

template <class F>
ConstructionError::Kind construction_error_kind(F&& f) {
  try {
    f();
  } catch (const ConstructionError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected ConstructionError";
  return ConstructionError::Kind::invalid_code;
}

}  // namespace

TEST(UnluckyBuilder, WorkedExampleOrderSix) {
  // i_6 = 9, i_5 = 6, i_4 = 8, i_3 = 5, i_2 = 3 as ranks in the successive candidate sets.
  const UnluckyChoiceCode code(6, {3, 1, 2, 2, 1});
  EXPECT_EQ(build_extremely_unlucky(code), sw({1, 1, 2, 2, 3, 5, 5, 4, 6, 6, 4, 3}));
}

TEST(UnluckyBuilder, SmallOrders) {
  EXPECT_EQ(build_extremely_unlucky(UnluckyChoiceCode(2, {1})), sw({1, 1, 2, 2}));
  std::set<StirlingWord> image;
  for (std::uint64_t i = 0; i < 2; ++i) image.insert(build_extremely_unlucky(UnluckyChoiceCode::from_index(3, i)));
  EXPECT_EQ(image, (std::set<StirlingWord>{sw({1, 1, 2, 2, 3, 3}), sw({1, 1, 2, 3, 3, 2})}));
  EXPECT_EQ(build_extremely_unlucky(UnluckyChoiceCode(1, {})), sw({1, 1}));
}

TEST(UnluckyBuilder, BijectionOntoExtremelyUnlucky) {
  for (unsigned n = 1; n <= 6; ++n) {
    std::set<StirlingWord> image;
    for (std::uint64_t i = 0; i < oracle::factorial(n - 1); ++i) {
      const auto w = build_extremely_unlucky(UnluckyChoiceCode::from_index(n, i));
      EXPECT_TRUE(meets_unlucky_prefix_criterion(w));
      EXPECT_EQ(oracle::park(oracle::Word(w.values().begin(), w.values().end())).lucky, std::vector<unsigned>{1});
      image.insert(w);
    }
    EXPECT_EQ(image.size(), oracle::factorial(n - 1));
    const auto all = collect(n, Filter::extremely_unlucky());
    EXPECT_EQ(image, std::set<StirlingWord>(all.begin(), all.end())) << "n=" << n;
  }
}

TEST(UnluckyBuilder, InvalidCodes) {
  EXPECT_EQ(construction_error_kind([] { UnluckyChoiceCode(3, {1}); }), ConstructionError::Kind::invalid_code);
  EXPECT_EQ(construction_error_kind([] { UnluckyChoiceCode(3, {3, 1}); }), ConstructionError::Kind::invalid_code);
  EXPECT_EQ(construction_error_kind([] { UnluckyChoiceCode(3, {1, 0}); }), ConstructionError::Kind::invalid_code);
  EXPECT_EQ(construction_error_kind([] { UnluckyChoiceCode::from_index(4, 6); }), ConstructionError::Kind::invalid_code);
  EXPECT_EQ(UnluckyChoiceCode(4, {3, 2, 1}).choices(), (std::vector<std::uint32_t>{3, 2, 1}));
}

TEST(PrefixCriterion, CharacterizesExtremelyUnlucky) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (const auto& w : collect(n)) EXPECT_EQ(meets_unlucky_prefix_criterion(w), lucky_count(w) == 1) << format_word(w);
  }
}

TEST(Parens, ToExtremelyLucky) {
  EXPECT_EQ(parens_to_extremely_lucky(ParenString::parse("( ) ( ) ( ( ) ( ( ) ) )")),
            sw({6, 6, 5, 5, 1, 4, 4, 2, 3, 3, 2, 1}));
  EXPECT_EQ(parens_to_extremely_lucky(ParenString::parse("((()))")), sw({1, 2, 3, 3, 2, 1}));
  EXPECT_EQ(parens_to_extremely_lucky(ParenString::parse("()")), sw({1, 1}));
}

TEST(Parens, FromStirling) {
  EXPECT_EQ(stirling_to_parens(sw({1, 1, 2, 2, 3, 5, 5, 4, 6, 6, 4, 3})).str(), "()()(()(()))");
  EXPECT_EQ(stirling_to_parens(sw({6, 6, 5, 5, 1, 4, 4, 2, 3, 3, 2, 1})).str(), "()()(()(()))");
  EXPECT_EQ(stirling_to_parens(sw({1, 1})).str(), "()");
}

TEST(Parens, Unbalanced) {
  EXPECT_EQ(construction_error_kind([] { ParenString::parse("())("); }), ConstructionError::Kind::unbalanced);
  EXPECT_EQ(construction_error_kind([] { ParenString::parse("(()"); }), ConstructionError::Kind::unbalanced);
  EXPECT_THROW(ParenString::parse("(x)"), ParseError);
}

TEST(Parens, BijectionWithExtremelyLucky) {
  const auto catalan = oracle::catalan_table(7);
  for (unsigned n = 1; n <= 7; ++n) {
    const auto all = all_paren_strings(n);
    EXPECT_EQ(all.size(), catalan[n]);
    std::set<StirlingWord> image;
    for (const auto& p : all) {
      const auto w = parens_to_extremely_lucky(p);
      ASSERT_TRUE(is_stirling(w.word()));
      EXPECT_EQ(lucky_count(w), n);
      EXPECT_EQ(stirling_to_parens(w), p);
      image.insert(w);
    }
    const auto lucky = collect(n, Filter::extremely_lucky());
    EXPECT_EQ(image, std::set<StirlingWord>(lucky.begin(), lucky.end()));
  }
}

TEST(Disvec, Reconstruction) {
  EXPECT_EQ(extremely_lucky_from_disvec(DisplacementComposition{0, 0, 0, 1, 3, 0, 0, 5, 7, 9}),
            sw({1, 4, 5, 5, 4, 2, 3, 3, 2, 1}));
  EXPECT_EQ(extremely_lucky_from_disvec(DisplacementComposition{0, 1}), sw({1, 1}));
  const auto lucky4 = collect(4, Filter::extremely_lucky());
  EXPECT_EQ(lucky4.size(), 14u);
  for (const auto& w : lucky4) EXPECT_EQ(extremely_lucky_from_disvec(displacement_composition(w)), w);
}

TEST(Disvec, UnluckyCarProfileAndInjectivity) {
  for (unsigned n = 1; n <= 6; ++n) {
    std::set<DisplacementComposition> seen;
    for (const auto& w : collect(n, Filter::extremely_lucky())) {
      const auto d = displacement_composition(w);
      EXPECT_TRUE(seen.insert(d).second);
      unsigned i = 0;
      for (Car car = 1; car <= 2 * n; ++car) {
        if (d(car) == 0) continue;
        ++i;
        EXPECT_EQ(w(car), n - i + 1);
        EXPECT_EQ(d(car), 2 * i - 1);
      }
      EXPECT_EQ(extremely_lucky_from_disvec(d), w);
    }
  }
}

TEST(Disvec, RejectsNonExtremelyLuckyCompositions) {
  using K = ConstructionError::Kind;
  EXPECT_EQ(construction_error_kind([] { extremely_lucky_from_disvec(DisplacementComposition{0, 1, 0}); }),
            K::not_extremely_lucky_composition);
  EXPECT_EQ(construction_error_kind([] { extremely_lucky_from_disvec(DisplacementComposition{0, 3, 0, 1}); }),
            K::not_extremely_lucky_composition);
  EXPECT_EQ(construction_error_kind([] { extremely_lucky_from_disvec(DisplacementComposition{0, 0, 0, 1, 3, 6}); }),
            K::not_extremely_lucky_composition);
  // Pattern is right but the first 2 has nowhere to go.
  EXPECT_EQ(construction_error_kind([] { extremely_lucky_from_disvec(DisplacementComposition{1, 0, 3, 0}); }),
            K::no_valid_placement);
}

TEST(Witness, TwoElementExamples) {
  EXPECT_EQ(witness_two_element(4, 3), sw({2, 2, 1, 1, 3, 3, 4, 4}));
  EXPECT_EQ(lucky_set(witness_two_element(4, 3)), (LuckySet{1, 3}));
  EXPECT_EQ(witness_two_element(4, 4), sw({1, 1, 2, 4, 4, 3, 3, 2}));
  EXPECT_EQ(lucky_set(witness_two_element(4, 4)), (LuckySet{1, 4}));
  using K = ConstructionError::Kind;
  EXPECT_EQ(construction_error_kind([] { witness_two_element(4, 8); }), K::not_admissible_pair);
  EXPECT_EQ(construction_error_kind([] { witness_two_element(4, 6); }), K::not_admissible_pair);
  EXPECT_EQ(construction_error_kind([] { witness_two_element(4, 1); }), K::not_admissible_pair);
  EXPECT_EQ(construction_error_kind([] { witness_two_element(4, 9); }), K::not_admissible_pair);
}

TEST(Witness, TwoElementSimulatesForAllAdmissiblePairs) {
  for (unsigned n = 1; n <= 10; ++n) {
    for (Car i = 2; i <= 2 * n; ++i) {
      const bool admissible = i <= n || i % 2 == 1;
      if (i == 2 * n || !admissible) {
        EXPECT_THROW(witness_two_element(n, i), ConstructionError) << n << " " << i;
        continue;
      }
      const auto w = witness_two_element(n, i);
      EXPECT_EQ(oracle::park(oracle::Word(w.values().begin(), w.values().end())).lucky, (std::vector<unsigned>{1, i}));
    }
  }
}

TEST(Witness, OneNMinusOneTwoNMinusTwo) {
  EXPECT_EQ(witness_1_n1_2n2(4), sw({3, 3, 1, 4, 4, 2, 2, 1}));
  EXPECT_EQ(lucky_set(witness_1_n1_2n2(4)), (LuckySet{1, 3, 6}));
  EXPECT_EQ(witness_1_n1_2n2(6).size(), 12u);
  EXPECT_EQ(lucky_set(witness_1_n1_2n2(6)), (LuckySet{1, 5, 10}));
  for (unsigned n = 4; n <= 10; n += 2) EXPECT_EQ(lucky_set(witness_1_n1_2n2(n)), (LuckySet{1, n - 1, 2 * n - 2}));
  EXPECT_EQ(construction_error_kind([] { witness_1_n1_2n2(5); }), ConstructionError::Kind::odd_order);
  EXPECT_EQ(construction_error_kind([] { witness_1_n1_2n2(2); }), ConstructionError::Kind::order_out_of_range);
}

TEST(Lift, Examples) {
  EXPECT_EQ(lift_admissible(sw({1, 1}), LiftMode::append), sw({1, 1, 2, 2}));
  EXPECT_EQ(lucky_set(lift_admissible(sw({1, 1}), LiftMode::append)), (LuckySet{1}));
  EXPECT_EQ(lift_admissible(sw({1, 1}), LiftMode::shift), sw({2, 2, 1, 1}));
  EXPECT_EQ(lucky_set(lift_admissible(sw({1, 1}), LiftMode::shift)), (LuckySet{1, 3}));
  EXPECT_EQ(lucky_set(lift_admissible(sw({3, 3, 1, 4, 4, 2, 2, 1}), LiftMode::shift)), (LuckySet{1, 3, 6, 9}));
}

TEST(Lift, PreservesOrExtendsLuckySetOverQn) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (const auto& w : collect(n)) {
      const auto s = lucky_set(w);
      const auto a = lift_admissible(w, LiftMode::append);
      const auto b = lift_admissible(w, LiftMode::shift);
      ASSERT_TRUE(is_stirling(a.word()));
      ASSERT_TRUE(is_stirling(b.word()));
      EXPECT_EQ(lucky_set(a), s);
      EXPECT_EQ(lucky_set(b), s.with(2 * n + 1));
    }
  }
}
