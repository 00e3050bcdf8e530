#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "stirling/enumeration.hpp"
#include "stirling/parking.hpp"
#include "stirling/word.hpp"

using namespace stirling;

namespace {

StirlingWord sw(std::initializer_list<Spot> v) { return validate_stirling(PreferenceWord(v)); }

std::vector<Spot> vec(std::span<const Spot> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(NextFreeIndex, QueriesAndOccupations) {
  NextFreeIndex idx(5);
  EXPECT_EQ(idx.free_count(), 5u);
  EXPECT_EQ(idx.first_free_from(1), 1u);
  idx.occupy(1);
  idx.occupy(2);
  idx.occupy(4);
  EXPECT_EQ(idx.free_count(), 2u);
  EXPECT_EQ(idx.first_free_from(1), 3u);
  EXPECT_EQ(idx.first_free_from(4), 5u);
  idx.occupy(5);
  EXPECT_EQ(idx.first_free_from(4), 6u);  // past the end: none free
  idx.reset(3);
  EXPECT_EQ(idx.free_count(), 3u);
  EXPECT_EQ(idx.first_free_from(2), 2u);
}

TEST(NextFreeIndex, MatchesLinearProbeOnRandomSequences) {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng() % 40;
    NextFreeIndex fast(m);
    LinearProbeIndex slow(m);
    for (std::size_t k = 0; k < m; ++k) {
      const Spot s = static_cast<Spot>(1 + rng() % m);
      const Spot a = fast.first_free_from(s);
      ASSERT_EQ(a, slow.first_free_from(s));
      if (a <= m) {
        fast.occupy(a);
        slow.occupy(a);
      }
      ASSERT_EQ(fast.free_count(), slow.free_count());
    }
  }
}

TEST(Park, FullOutcomeOfNestedExample) {
  const auto out = park(PreferenceWord{1, 2, 2, 1, 3, 3});
  EXPECT_EQ(out.spots, (std::vector<Spot>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(out.lucky, (LuckySet{1, 2}));
  EXPECT_EQ(out.disvec, (DisplacementComposition{0, 0, 1, 3, 2, 3}));
  EXPECT_EQ(out.total, 9u);
}

TEST(Park, LuckySetOfAdmissibleExample) {
  EXPECT_EQ(park(PreferenceWord{3, 3, 1, 4, 4, 2, 2, 1}).lucky, (LuckySet{1, 3, 6}));
}

TEST(Park, FailureNamesFirstStrandedCar) {
  try {
    park(PreferenceWord{2, 2, 3, 1, 6, 6});
    FAIL() << "expected ParkFailure";
  } catch (const ParkFailure& e) {
    // Cars 1..5 take spots 2,3,4,1,6; car 6 prefers 6 and nothing is free at or after it.
    EXPECT_EQ(e.kind(), ParkFailure::Kind::no_free_spot);
    EXPECT_EQ(e.car(), 6u);
  }
  EXPECT_EQ(oracle::park({2, 2, 3, 1, 6, 6}).failed_car, 6u);
}

TEST(Park, PreferenceBeyondStreet) {
  try {
    park(PreferenceWord{1, 3});
    FAIL() << "expected ParkFailure";
  } catch (const ParkFailure& e) {
    EXPECT_EQ(e.kind(), ParkFailure::Kind::preference_out_of_range);
    EXPECT_EQ(e.car(), 2u);
  }
}

TEST(Park, AgreesWithOracleOnAllShortWords) {
  for (unsigned m = 1; m <= 5; ++m) {
    std::vector<Spot> w(m, 1);
    for (;;) {
      const auto expected = oracle::park(oracle::Word(w.begin(), w.end()));
      ParkingRun<> run;
      const auto failed = run.run(w);
      ASSERT_EQ(failed == 0, expected.ok);
      if (expected.ok) {
        EXPECT_EQ(vec(run.spots()), std::vector<Spot>(expected.spots.begin(), expected.spots.end()));
        EXPECT_EQ(run.lucky_count(), expected.lucky.size());
      } else {
        EXPECT_EQ(failed, expected.failed_car);
      }
      std::size_t i = m;
      while (i > 0 && w[i - 1] == m + 1) w[--i] = 1;  // also covers out-of-range preferences
      if (i == 0) break;
      ++w[i - 1];
    }
  }
}

TEST(LuckySetOf, Examples) {
  EXPECT_EQ(lucky_set(sw({1, 1, 2, 2, 3, 3})), (LuckySet{1}));
  const auto lucky = lucky_set(sw({6, 6, 5, 5, 1, 4, 4, 2, 3, 3, 2, 1}));
  EXPECT_EQ(lucky, (LuckySet{1, 3, 5, 6, 8, 9}));
  EXPECT_EQ(lucky.size(), 6u);
  EXPECT_EQ(lucky_set(sw({1, 1})), (LuckySet{1}));
}

TEST(DisplacementCompositionOf, Examples) {
  EXPECT_EQ(displacement_composition(sw({1, 1, 2, 4, 4, 2, 3, 3})), (DisplacementComposition{0, 1, 1, 0, 1, 4, 4, 5}));
  EXPECT_EQ(displacement_composition(sw({1, 2, 3, 3, 2, 1})), (DisplacementComposition{0, 0, 0, 1, 3, 5}));
  EXPECT_EQ(displacement_composition(sw({1, 1})), (DisplacementComposition{0, 1}));
}

TEST(TotalDisplacement, Examples) {
  for (const auto& w : collect(3)) EXPECT_EQ(total_displacement(w), 9u) << format_word(w);
  EXPECT_EQ(total_displacement(sw({1, 1})), 1u);
  EXPECT_EQ(total_displacement(sw({1, 1, 2, 4, 4, 2, 3, 3})), 16u);
}

TEST(ParkingProperties, ExhaustiveAgainstOracle) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (const auto& w : collect(n)) {
      const auto out = park(w);
      const auto expected = oracle::park(oracle::Word(w.values().begin(), w.values().end()));
      ASSERT_TRUE(expected.ok);
      EXPECT_EQ(std::vector<Car>(out.lucky.members().begin(), out.lucky.members().end()), expected.lucky);
      EXPECT_EQ(out.total, std::uint64_t{n} * n);
      EXPECT_TRUE(out.lucky.contains(1));
      EXPECT_FALSE(out.lucky.contains(2 * n));
      EXPECT_LE(out.lucky.size(), n);
      EXPECT_EQ(out.lucky.contains(2 * n - 1), w(2 * n - 1) == 1) << format_word(w);
    }
  }
}

TEST(ParkingProperties, RearrangementsKeepTotalDisplacement) {
  std::mt19937_64 rng(7);
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& w : collect(n)) {
      std::vector<Spot> v(w.values().begin(), w.values().end());
      for (int s = 0; s < 200; ++s) {
        std::shuffle(v.begin(), v.end(), rng);
        const auto expected = oracle::park(oracle::Word(v.begin(), v.end()));
        ASSERT_TRUE(expected.ok);
        std::uint64_t total = 0;
        for (auto d : expected.displacement) total += d;
        EXPECT_EQ(total, std::uint64_t{n} * n);
        EXPECT_EQ(park(PreferenceWord(v)).total, total);
      }
    }
  }
}
