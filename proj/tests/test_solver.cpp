#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sdr/exact.hpp"
#include "sdr/generators.hpp"
#include "sdr/lll.hpp"
#include "sdr/solver.hpp"

using namespace sdr;

TEST(SampleTuple, SingletonsAreForced) {
  Rng rng(99);
  for (int k = 0; k < 10; ++k) {
    EXPECT_EQ(sample_tuple(SetFamily{{3}, {7}}, rng), (Assignment{{3, 7}}));
  }
}

TEST(SampleTuple, DeterministicForSeed) {
  const SetFamily f{{1, 2, 3, 4, 5}, {10, 20, 30}, {7, 8}};
  Rng a(42), b(42);
  for (int k = 0; k < 50; ++k) EXPECT_EQ(sample_tuple(f, a), sample_tuple(f, b));
}

TEST(SampleTuple, UniformWithinFourSigma) {
  const SetFamily f{{0, 1, 2, 3}};
  Rng rng(7);
  constexpr int kDraws = 100'000;
  std::array<int, 4> counts{};
  for (int k = 0; k < kDraws; ++k) ++counts[sample_tuple(f, rng)[0]];
  const double sigma = std::sqrt(0.25 * 0.75 / kDraws);  // ~0.00137
  for (auto c : counts) EXPECT_NEAR(static_cast<double>(c) / kDraws, 0.25, 4 * sigma);
}

TEST(SampleTuple, EmptySetIsDomainError) {
  Rng rng(0);
  EXPECT_THROW(sample_tuple(SetFamily{{1}, {}}, rng), std::domain_error);
}

TEST(RngBelow, StaysInRange) {
  Rng rng(5);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 1000ULL, (1ULL << 63) + 1}) {
    for (int k = 0; k < 200; ++k) EXPECT_LT(rng.below(bound), bound);
  }
}

TEST(ViolatedEvents, Examples) {
  const SetFamily f{{5, 9}, {5}, {5, 9}};
  EXPECT_TRUE(violated_events(f, Assignment{{9, 5, 4}}).empty());
  EXPECT_EQ(violated_events(f, Assignment{{5, 5, 9}}),
            (std::vector<std::pair<Index, Index>>{{0, 1}}));
  EXPECT_EQ(violated_events(f, Assignment{{5, 5, 5}}),
            (std::vector<std::pair<Index, Index>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(FindTransversal, DisjointSingletonsNeedNoResamples) {
  const auto out = find_transversal_mt(SetFamily{{0}, {1}, {2}}, 0);
  ASSERT_TRUE(out.found());
  EXPECT_EQ(out.transversal->choices(), (std::vector<Label>{0, 1, 2}));
  EXPECT_EQ(out.resample_count, 0u);
}

TEST(FindTransversal, ImpossibleFamilyExhaustsCap) {
  for (std::size_t cap : {0u, 1u, 17u, 500u}) {
    const auto out = find_transversal_mt(SetFamily{{0}, {0}}, 3, cap);
    EXPECT_FALSE(out.found());
    EXPECT_EQ(out.resample_count, cap);
    EXPECT_EQ(out.rounds_cap, cap);
  }
}

TEST(FindTransversal, FanoLines) {
  const auto f = sdr::testing::fano_lines();
  ASSERT_TRUE(has_transversal_exact(f));
  const auto out = find_transversal_mt(f, 1, 10'000);
  ASSERT_TRUE(out.found());
  EXPECT_TRUE(validate_transversal(f, out.transversal->assignment()));
}

TEST(FindTransversal, EmptySetIsDomainError) {
  EXPECT_THROW(find_transversal_mt(SetFamily{{}, {1}}, 0, 10), std::domain_error);
}

TEST(FindTransversal, EmptyFamilyHasEmptyTransversal) {
  const auto out = find_transversal_mt(SetFamily{}, 0, 10);
  ASSERT_TRUE(out.found());
  EXPECT_EQ(out.transversal->size(), 0u);
}

TEST(FindTransversal, Deterministic) {
  const auto f = gen_family(12, 5, 2, 40, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(find_transversal_mt(f, seed, 1000), find_transversal_mt(f, seed, 1000));
  }
}

TEST(FindTransversal, SoundOnRandomTrials) {
  std::mt19937_64 rng(77);
  std::size_t found = 0;
  for (int trial = 0; trial < 100'000; ++trial) {
    const auto f = sdr::testing::random_family(rng, 1 + trial % 7, 2 + trial % 9, false);
    const auto out = find_transversal_mt(f, static_cast<std::uint64_t>(trial), 200);
    if (out.found()) {
      ++found;
      ASSERT_TRUE(validate_transversal(f, out.transversal->assignment()));
      ASSERT_LE(out.resample_count, out.rounds_cap);
    } else {
      ASSERT_EQ(out.resample_count, out.rounds_cap);
    }
  }
  EXPECT_GT(found, 10'000u);
}

TEST(FindTransversal, DefaultCap) {
  EXPECT_EQ(default_rounds_cap(0), 10'000u);
  EXPECT_EQ(default_rounds_cap(20), 50'000u);
  EXPECT_EQ(find_transversal_mt(SetFamily{{0}, {0}}, 0).rounds_cap, 10'400u);
}

TEST(DeriveSeed, PureAndSpread) {
  EXPECT_EQ(derive_seed(5, 9), derive_seed(5, 9));
  EXPECT_NE(derive_seed(5, 9), derive_seed(5, 10));
  EXPECT_NE(derive_seed(5, 9), derive_seed(6, 9));
}
