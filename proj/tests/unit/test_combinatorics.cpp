#include <gtest/gtest.h>

#include <cmath>

#include "saw/combinatorics.hpp"
#include "saw/oracle.hpp"
#include "saw/rng.hpp"

using namespace saw;

TEST(Combinatorics, Binomial) {
  EXPECT_EQ(binomial(4, 2), 6);
  for (std::uint64_t n : {0u, 1u, 7u, 100u}) EXPECT_EQ(binomial(n, 0), 1);
  EXPECT_EQ(binomial(52, 5), 2598960);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Combinatorics, WalkCountExamples) {
  EXPECT_EQ(walk_count(1, 1, 0), 2);
  EXPECT_EQ(walk_count(1, 0, 1), 9);
  EXPECT_EQ(walk_count(2, 1, 1), 50);
}

TEST(Combinatorics, WalkCountSymmetric) {
  for (std::uint64_t a = 0; a < 6; ++a)
    for (std::uint64_t b = 0; b < 6; ++b)
      for (std::uint64_t t = 0; t < 4; ++t) EXPECT_EQ(walk_count(a, b, t), walk_count(b, a, t));
}

TEST(Combinatorics, WalkCountMatchesEnumeration) {
  for (coord_t n1 = 0; n1 <= 5; ++n1)
    for (coord_t n2 = 0; n1 + n2 <= 5; ++n2)
      for (std::uint64_t t = 0; t <= 2; ++t) {
        const auto len = static_cast<std::size_t>(n1 + n2) + 2 * t;
        EXPECT_EQ(walk_count(n1, n2, t), enumerate_walks({0, 0}, {n1, n2}, len).count()) << n1 << "," << n2 << "," << t;
      }
}

TEST(Combinatorics, ClosedWalks) {
  EXPECT_EQ(closed_walk_count(0), 1);
  EXPECT_EQ(closed_walk_count(1), 4);
  EXPECT_EQ(closed_walk_count(2), 36);
  EXPECT_EQ(closed_walk_count(3), 400);
  for (std::uint64_t k = 0; k <= 3; ++k) {
    EXPECT_EQ(closed_walk_count(k), walk_count(0, 0, k));
    EXPECT_EQ(closed_walk_count(k), enumerate_walks({0, 0}, {0, 0}, 2 * k).count());
  }
}

TEST(Combinatorics, BinomialBoundExamples) {
  EXPECT_TRUE(binomial_bound_check(100, 5, 3));
  EXPECT_TRUE(binomial_bound_check(1000, -20, 40));
  EXPECT_TRUE(binomial_bound_check(50, 0, 1));
}

TEST(Combinatorics, BinomialBoundPreconditions) {
  EXPECT_THROW(binomial_bound_check(100, 11, 3), invalid_argument);
  EXPECT_THROW(binomial_bound_check(100, 0, 11), invalid_argument);
  EXPECT_THROW(binomial_bound_check(0, 0, 0), invalid_argument);
}

TEST(Combinatorics, BinomialBoundEdgeCases) {
  EXPECT_TRUE(binomial_bound_check(10, 0, 0));
  EXPECT_TRUE(binomial_bound_check(10, 1, 1));   // ratio exactly 11/10
  EXPECT_TRUE(binomial_bound_check(10, -1, 1));
}

TEST(Combinatorics, BinomialBoundRandomTriples) {
  RngStream rng(12345, 0);
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::int64_t>(10 + rng.uniform_below(5000));
    const auto lim = n / 10;
    const auto k = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(lim) + 1));
    const auto x = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(2 * lim) + 1)) - lim;
    if (n + x - k < std::llabs(x) || n + x - k < k) continue;
    EXPECT_TRUE(binomial_bound_check(n, x, k)) << n << " " << x << " " << k;
  }
}
