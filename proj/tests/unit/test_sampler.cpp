#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "saw/oracle.hpp"
#include "saw/sampler.hpp"

using namespace saw;

namespace {

double sigma(double p, double n) { return std::sqrt(p * (1 - p) / n); }

void expect_uniform(const CountTable& t, std::uint64_t len, const std::vector<Walk>& support, int n, std::uint64_t seed) {
  RngStream rng(seed, 0);
  std::vector<Walk> draws;
  draws.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) draws.push_back(sample_low_girth_walk(t, rng, len));
  const auto r = uniformity_test(draws, support);
  EXPECT_LT(r.max_sigma, 4.0);
  EXPECT_GT(r.p_value, 1e-4);
}

}  // namespace

TEST(Rng, UniformBelowRange) {
  RngStream rng(1, 2);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(rng.uniform_below(7), 7u);
  EXPECT_THROW(rng.uniform_below(0), invalid_argument);
}

TEST(Rng, StreamsAreReproducible) {
  RngStream a(99, 3), b(99, 3), c(99, 4);
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs |= x != c.next_u64();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, UniformBignatSmallBounds) {
  RngStream rng(5, 0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(uniform_bignat(rng, 1), 0);
  EXPECT_THROW(uniform_bignat(rng, 0), invalid_argument);
  const int n = 100000;
  int ones = 0;
  for (int i = 0; i < n; ++i) ones += uniform_bignat(rng, 2) == 1;
  EXPECT_LT(std::abs(ones / double(n) - 0.5), 4 * sigma(0.5, n));
}

TEST(Rng, UniformBignatHugeBound) {
  RngStream rng(6, 0);
  BigNat bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, 100);
  std::vector<int> lead(10, 0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const BigNat v = uniform_bignat(rng, bound);
    ASSERT_LT(v, bound);
    std::string s = v.get_str();
    s.insert(0, 100 - s.size(), '0');
    ++lead[s[0] - '0'];
  }
  for (int c : lead) EXPECT_LT(std::abs(c / double(n) - 0.1), 4 * sigma(0.1, n));
}

TEST(Sampler, TwoShortestPaths) {
  const auto t = build_table(Region::full(), {0, 0}, {1, 1}, 1, 0);
  const auto support = enumerate_low_girth_walks(Region::full(), {0, 0}, {1, 1}, 2, 1).items;
  ASSERT_EQ(support.size(), 2u);
  expect_uniform(t, 2, support, 20000, 11);
}

TEST(Sampler, FourSawsOfLengthFour) {
  const auto t = build_table(Region::full(), {0, 0}, {1, 1}, 2, 1);
  const auto support = enumerate_low_girth_walks(Region::full(), {0, 0}, {1, 1}, 4, 2).items;
  ASSERT_EQ(support.size(), 4u);
  expect_uniform(t, 4, support, 40000, 12);
}

TEST(Sampler, NonBacktrackingLengthThree) {
  const auto t = build_table(Region::full(), {0, 0}, {1, 0}, 1, 1);
  const auto support = enumerate_low_girth_walks(Region::full(), {0, 0}, {1, 0}, 3, 1).items;
  ASSERT_EQ(support.size(), 2u);
  expect_uniform(t, 3, support, 20000, 13);
}

TEST(Sampler, UniformOnMediumInstance) {
  const auto t = build_table(Region::full(), {0, 0}, {2, 1}, 1, 2);
  const auto support = enumerate_low_girth_walks(Region::full().restricted_to(LatticeBox{{-2, -2}, {4, 3}}), {0, 0}, {2, 1}, 7, 1).items;
  ASSERT_LE(support.size(), 200u);
  ASSERT_EQ(low_girth_walk_count(t, 7), support.size());
  expect_uniform(t, 7, support, 30000, 14);
}

TEST(Sampler, Deterministic) {
  const auto t = build_table(Region::full(), {0, 0}, {6, 4}, 2, 3);
  RngStream a(77, 5), b(77, 5);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(sample_low_girth_walk(t, a, 16), sample_low_girth_walk(t, b, 16));
}

TEST(Sampler, ZeroCountIsAnError) {
  const auto t = build_table(Region::box(LatticeBox{{0, 0}, {1, 0}}), {0, 0}, {1, 0}, 1, 1);
  RngStream rng(1, 0);
  EXPECT_THROW(sample_low_girth_walk(t, rng, 3), invalid_argument);
}

TEST(SampleSaw, FirstAttemptWhenGirthCoversLength) {
  const auto t = build_table(Region::full(), {0, 0}, {2, 1}, 3, 1);
  RngStream rng(3, 0);
  for (int i = 0; i < 200; ++i) EXPECT_EQ(sample_saw(t, rng, 5).attempts, 1u);
}

TEST(SampleSaw, RejectionIsUniformOnSaws) {
  const auto t = build_table(Region::full(), {0, 0}, {2, 1}, 1, 2);
  const auto saws = enumerate_saws(Region::full(), {0, 0}, {2, 1}, 7).items;
  ASSERT_LE(saws.size(), 100u);
  RngStream rng(4, 0);
  std::vector<Walk> draws;
  for (int i = 0; i < 20000; ++i) {
    const auto rep = sample_saw(t, rng, 7);
    ASSERT_TRUE(is_self_avoiding(rep.walk));
    draws.push_back(rep.walk);
  }
  const auto r = uniformity_test(draws, saws);
  EXPECT_LT(r.max_sigma, 4.0);
  EXPECT_GT(r.p_value, 1e-4);
}

TEST(SampleSaw, BudgetExhaustedWhenNoSawExists) {
  // closed walks of length 4 avoid backtracking but are never paths
  const auto t = build_table(Region::full(), {0, 0}, {0, 0}, 1, 2);
  RngStream rng(5, 0);
  try {
    sample_saw(t, rng, 4, 50);
    FAIL();
  } catch (const sampling_budget_exhausted& e) {
    EXPECT_EQ(e.attempts(), 50u);
  }
}

TEST(SampleSaw, AcceptanceOnLargerInstance) {
  const auto t = build_table(Region::full(), {0, 0}, {100, 100}, 2, 6);
  RngStream rng(6, 0);
  std::uint64_t attempts = 0;
  const int n = 300;
  for (int i = 0; i < n; ++i) attempts += sample_saw(t, rng, 212).attempts;
  EXPECT_GE(n / double(attempts), 0.5);
}

TEST(Family, SingleNonzeroEntry) {
  const auto a = build_table(Region::full(), {0, 0}, {2, 0}, 1, 0);
  const auto z = build_table(Region::points({{0, 0}, {2, 0}}), {0, 0}, {2, 0}, 1, 1);
  RngStream rng(1, 0);
  for (int i = 0; i < 50; ++i) {
    const auto s = sample_length_then_walk({&z, &a}, rng);
    EXPECT_EQ(s.draw.table, 1u);
    EXPECT_EQ(s.walk, make_walk({0, 0}, "RR"));
  }
}

TEST(Family, ProportionalToCounts) {
  const auto one = build_table(Region::full(), {0, 0}, {2, 0}, 1, 0);
  const auto three = build_table(Region::full(), {0, 0}, {1, 2}, 1, 0);
  RngStream rng(2, 0);
  const int n = 20000;
  int first = 0;
  for (int i = 0; i < n; ++i) first += sample_length_then_walk({&one, &three}, rng).draw.table == 0;
  EXPECT_LT(std::abs(first / double(n) - 0.25), 4 * sigma(0.25, n));
}

TEST(Family, UniformOverUnion) {
  const auto a = build_table(Region::full(), {0, 0}, {1, 1}, 2, 1);
  const auto b = build_table(Region::full(), {0, 0}, {2, 0}, 1, 1);
  std::vector<std::pair<std::size_t, Walk>> support;
  for (std::size_t len : {2u, 4u})
    for (const auto& w : enumerate_low_girth_walks(Region::full(), {0, 0}, {1, 1}, len, 2).items) support.push_back({0, w});
  for (std::size_t len : {2u, 4u})
    for (const auto& w : enumerate_low_girth_walks(Region::full().restricted_to(LatticeBox{{-1, -1}, {3, 1}}), {0, 0}, {2, 0}, len, 1).items)
      support.push_back({1, w});
  ASSERT_LE(support.size(), 50u);
  RngStream rng(3, 0);
  std::vector<std::pair<std::size_t, Walk>> draws;
  for (int i = 0; i < 30000; ++i) {
    auto s = sample_length_then_walk({&a, &b}, rng);
    draws.push_back({s.draw.table, s.walk});
  }
  const auto r = uniformity_test(draws, support);
  EXPECT_LT(r.max_sigma, 4.0);
}

TEST(Family, AllZeroIsAnError) {
  const auto z = build_table(Region::points({{0, 0}, {2, 0}}), {0, 0}, {2, 0}, 1, 1);
  RngStream rng(4, 0);
  EXPECT_THROW(sample_length_then_walk({&z}, rng), invalid_argument);
  EXPECT_THROW(sample_length_then_walk({}, rng), invalid_argument);
}
