#include <gtest/gtest.h>

#include <random>

#include "symvol/ribbon/brute_volume.hpp"
#include "symvol/ribbon/enumerate.hpp"
#include "symvol/volumes.hpp"

namespace symvol::ribbon {
namespace {

Rational q(long p, long r = 1) { return Rational(BigInt(p), BigInt(r)); }

Rational brute(int g, std::vector<Rational> l) { return brute_volume(g, static_cast<int>(l.size()), l); }

TEST(BruteVolume, PairOfPantsCountsOneGraph) {
  for (const auto& l : std::vector<std::vector<Rational>>{
           {q(1), q(1), q(1)}, {q(3), q(4), q(5)}, {q(1), q(2), q(7)}, {q(1), q(1), q(2)}, {q(1, 3), q(5, 2), q(2)}}) {
    EXPECT_EQ(brute(0, l), q(1)) << l[0] << "," << l[1] << "," << l[2];
  }
}

TEST(BruteVolume, OneHoledTorus) {
  EXPECT_EQ(brute(1, {q(2)}), q(1, 12));
  for (const auto& l : {q(1), q(7, 3), q(10)}) {
    EXPECT_EQ(brute(1, {l}), l * l / q(48));
  }
}

TEST(BruteVolume, FourHoledSphere) {
  EXPECT_EQ(brute(0, {q(3), q(4), q(5), q(6)}), q(43));
  const std::vector<std::vector<Rational>> points{{q(1), q(1), q(1), q(1)}, {q(1, 2), q(9), q(2, 3), q(5)}};
  for (const auto& l : points) {
    EXPECT_EQ(brute(0, l), evaluate(volume(0, 4), l));
  }
}

TEST(BruteVolume, TwoHoledTorusAtRandomPoints) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(1, 9);
  for (int trial = 0; trial < 3; ++trial) {
    const std::vector<Rational> l{q(d(rng), d(rng)), q(d(rng), d(rng))};
    EXPECT_EQ(brute(1, l), evaluate(volume(1, 2), l));
  }
}

TEST(BruteVolume, IndependentOfEnumerationOrder) {
  const std::vector<Rational> l{q(2), q(3)};
  const Rational expected = brute(1, l);
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    EXPECT_EQ(brute_volume(1, 2, l, {.trivalent_only = false, .max_half_edges = std::nullopt, .shuffle_seed = seed}),
              expected);
  }
}

TEST(BruteVolume, RejectsBadInput) {
  EXPECT_THROW(brute(0, {q(1), q(1)}), std::invalid_argument);
  EXPECT_THROW(brute(0, {q(1), q(0), q(1)}), std::invalid_argument);
  EXPECT_THROW(brute(0, {q(1), q(-2), q(1)}), std::invalid_argument);
  EXPECT_THROW(brute_volume(0, 4, std::vector<Rational>{q(1), q(1), q(1)}), std::invalid_argument);
  EXPECT_THROW(brute_volume(0, 5, std::vector<Rational>(5, q(1)), {.max_half_edges = 4}), ResourceLimitError);
}

}  // namespace
}  // namespace symvol::ribbon
