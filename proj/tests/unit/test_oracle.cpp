#include <gtest/gtest.h>

#include <set>

#include "saw/combinatorics.hpp"
#include "saw/oracle.hpp"

using namespace saw;

namespace {

std::size_t saws_from_origin(std::size_t n) {
  std::size_t total = 0;
  const auto r = static_cast<coord_t>(n);
  for (coord_t x = -r; x <= r; ++x)
    for (coord_t y = -r; y <= r; ++y)
      if (static_cast<std::size_t>(std::abs(x) + std::abs(y)) <= n)
        total += enumerate_saws(Region::full(), {0, 0}, {x, y}, n).count();
  return total;
}

}  // namespace

TEST(Oracle, SmallInstances) {
  EXPECT_EQ(enumerate_saws(Region::full(), {0, 0}, {1, 0}, 3).count(), 2u);
  EXPECT_EQ(enumerate_low_girth_walks(Region::full(), {0, 0}, {1, 0}, 3, 1).count(), 2u);
  EXPECT_EQ(enumerate_walks({0, 0}, {1, 0}, 3).count(), 9u);
  EXPECT_EQ(enumerate_saws(Region::full(), {0, 0}, {0, 0}, 4).count(), 0u);
  EXPECT_EQ(enumerate_low_girth_walks(Region::full(), {0, 0}, {0, 0}, 4, 1).count(), 8u);
  EXPECT_EQ(enumerate_saws(Region::full(), {0, 0}, {2, 2}, 4).count(), 6u);
}

TEST(Oracle, KnownSawTotals) {
  const std::size_t c[] = {1, 4, 12, 36, 100, 284, 780, 2172};
  for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(saws_from_origin(n), c[n]) << n;
}

TEST(Oracle, WalksMatchClosedForm) {
  for (std::uint64_t t = 0; t <= 3; ++t)
    for (coord_t x = 0; x <= 3; ++x)
      for (coord_t y = 0; y <= 3; ++y)
        EXPECT_EQ(mpz_class(static_cast<unsigned long>(
                      enumerate_walks({0, 0}, {x, y}, static_cast<std::size_t>(x + y) + 2 * t).count())),
                  walk_count(static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y), t));
}

TEST(Oracle, ItemsAreDistinctAndValid) {
  const auto r = enumerate_low_girth_walks(Region::full(), {0, 0}, {2, 1}, 9, 2);
  std::set<Walk> seen(r.items.begin(), r.items.end());
  EXPECT_EQ(seen.size(), r.count());
  for (const Walk& w : r.items) {
    EXPECT_EQ(w.length(), 9u);
    EXPECT_EQ(w.end(), (Point{2, 1}));
  }
}

TEST(Oracle, Caps) {
  EXPECT_THROW(enumerate_saws(Region::full(), {0, 0}, {1, 0}, 17), cap_exceeded);
  EXPECT_NO_THROW(enumerate_saws(Region::full(), {0, 0}, {17, 0}, 17, 17));
  EXPECT_THROW(enumerate_partitions(5, OmegaParams{}), cap_exceeded);
  EXPECT_THROW(enumerate_low_girth_walks(Region::full(), {0, 0}, {1, 0}, 1, 0), invalid_argument);
}

TEST(Oracle, PartitionMethodsAgree) {
  for (int k = 1; k <= 3; ++k)
    for (std::uint64_t extra : {0u, 2u, 5u}) {
      const OmegaParams p{1.0, 0.5, 6u * k + extra};
      auto a = enumerate_partitions_by_subsets(k, p).items;
      auto b = enumerate_partitions_by_cuts(k, p).items;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      EXPECT_EQ(a, b) << k << ' ' << extra;
    }
  // large budgets admit closed interfaces, including loops through one boundary point
  for (int k = 1; k <= 2; ++k) {
    const OmegaParams p{1.0, 0.5, 8u * k + 6};
    auto a = enumerate_partitions_by_subsets(k, p).items;
    auto b = enumerate_partitions_by_cuts(k, p).items;
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b) << k;
  }
}

TEST(Uniformity, PerfectSample) {
  std::vector<int> support{1, 2, 3, 4};
  std::vector<int> samples;
  for (int i = 0; i < 100; ++i) samples.push_back(support[static_cast<std::size_t>(i % 4)]);
  const auto r = uniformity_test(samples, support);
  EXPECT_EQ(r.counts, (std::vector<std::size_t>{25, 25, 25, 25}));
  EXPECT_DOUBLE_EQ(r.chi_square, 0.0);
  EXPECT_DOUBLE_EQ(r.p_value, 1.0);
  EXPECT_EQ(r.dof, 3u);
}

TEST(Uniformity, SkewedSampleFails) {
  std::vector<int> samples(900, 1);
  samples.resize(1000, 2);
  const auto r = uniformity_test(samples, std::vector<int>{1, 2});
  EXPECT_GT(r.max_sigma, 20.0);
  EXPECT_LT(r.p_value, 1e-10);
}

TEST(Uniformity, Errors) {
  EXPECT_THROW(uniformity_test(std::vector<int>{5}, std::vector<int>{1, 2}), error);
  EXPECT_THROW(uniformity_test(std::vector<int>{}, std::vector<int>{}), invalid_argument);
  EXPECT_THROW(uniformity_test(std::vector<int>{}, std::vector<int>{1, 1}), invalid_argument);
}
