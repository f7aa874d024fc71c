#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "saw/path_theory.hpp"
#include "saw/rng.hpp"

using namespace saw;

namespace {

Walk w0(const char* moves) { return make_walk({0, 0}, moves); }

// Random non-adjacent subset of the straight indices of b.
IndexSet random_bump_set(const Walk& b, RngStream& rng) {
  IndexSet m;
  for (std::size_t i : bumpable_indices(b, Region::full())) {
    if (!m.empty() && m.back() + 1 == i) continue;
    if (rng.uniform_below(3) == 0) m.push_back(i);
  }
  return m;
}

}  // namespace

TEST(PathTheory, ShortestPathUnique) {
  RngStream rng(1, 0);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(sample_shortest_path(rng, 1, 0), w0("R"));
}

TEST(PathTheory, ShortestPathComposition) {
  RngStream rng(2, 0);
  for (int i = 0; i < 50; ++i) {
    const Walk w = sample_shortest_path(rng, 7, 4);
    EXPECT_EQ(std::count(w.moves.begin(), w.moves.end(), Direction::R), 7);
    EXPECT_EQ(std::count(w.moves.begin(), w.moves.end(), Direction::U), 4);
  }
}

TEST(PathTheory, ShortestPathUniformOnThree) {
  RngStream rng(3, 0);
  std::map<std::string, int> freq;
  const int n = 30000;
  for (int i = 0; i < n; ++i) ++freq[moves_to_string(sample_shortest_path(rng, 2, 1).moves)];
  ASSERT_EQ(freq.size(), 3u);
  const double p = 1.0 / 3, sigma = std::sqrt(p * (1 - p) / n);
  for (const auto& [k, c] : freq) EXPECT_LT(std::abs(c / double(n) - p), 4 * sigma) << k;
}

TEST(PathTheory, StraightPairs) {
  EXPECT_EQ(straight_pair_count(w0("RRR")), 2u);
  EXPECT_EQ(straight_pair_count(w0("RURU")), 0u);
  EXPECT_EQ(straight_pair_count(w0("RRUUR")), 2u);
}

TEST(PathTheory, Corners) {
  EXPECT_EQ(corner_count(w0("RRR")), 2u);
  EXPECT_EQ(corner_count(w0("RU")), 3u);
  EXPECT_EQ(corner_count(w0("RURU")), 5u);
}

TEST(PathTheory, BumpExamples) {
  const Walk b = bump(w0("RRRRR"), {1, 3, 4});
  EXPECT_EQ(b.length(), 11u);
  EXPECT_EQ(b.end(), (Point{5, 0}));
  EXPECT_EQ(points_of(b)[1], (Point{0, -1}));
  EXPECT_EQ(bump(w0("RURRU"), {}), w0("RURRU"));
  const Walk u = bump(w0("UU"), {2});
  EXPECT_EQ(u, w0("ULUR"));
  EXPECT_EQ(u.end(), (Point{0, 2}));
  EXPECT_TRUE(is_self_avoiding(u));
}

TEST(PathTheory, BumpErrors) {
  EXPECT_THROW(bump(w0("RR"), {3}), invalid_argument);
  EXPECT_THROW(bump(w0("RR"), {0}), invalid_argument);
  EXPECT_THROW(bump(w0("RDR"), {2}), invalid_argument);
}

TEST(PathTheory, BumpableIndices) {
  EXPECT_TRUE(bumpable_indices(w0("RURU"), Region::full()).empty());
  EXPECT_EQ(bumpable_indices(w0("RRR"), Region::full()), (IndexSet{2, 3}));
  EXPECT_TRUE(bumpable_indices(w0("RR"), Region::box(LatticeBox{{0, 0}, {2, 0}})).empty());
  EXPECT_THROW(bumpable_indices(w0("RDR"), Region::full()), invalid_argument);
}

TEST(PathTheory, BumpableIndicesInsideBoxStayInside) {
  const Region box = Region::box(LatticeBox{{0, -3}, {8, 3}});
  const Walk b = w0("RRRRRRRR");
  for (std::size_t i : bumpable_indices(b, box)) {
    const auto pts = points_of(bump(b, {i}));
    for (Point p : pts) EXPECT_TRUE(box.contains(p));
  }
}

TEST(PathTheory, Unbump) {
  EXPECT_EQ(unbump(w0("ULUR")), w0("UU"));
  EXPECT_EQ(unbump(w0("RRUR")), w0("RRUR"));
  EXPECT_THROW(unbump(w0("RLR")), invalid_argument);
  EXPECT_THROW(unbump(w0("RDR")), invalid_argument);
}

TEST(PathTheory, BumpRoundTripRandom) {
  RngStream rng(7, 0);
  for (int i = 0; i < 1000; ++i) {
    const Walk b = sample_shortest_path(rng, 1 + rng.uniform_below(15), 1 + rng.uniform_below(15));
    const IndexSet m = random_bump_set(b, rng);
    ASSERT_TRUE(is_non_adjacent(m));
    const Walk a = bump(b, m);
    EXPECT_TRUE(is_self_avoiding(a));
    EXPECT_EQ(a.length(), b.length() + 2 * m.size());
    EXPECT_EQ(unbump(a), b);
  }
}

TEST(PathTheory, BasePathExamples) {
  const Walk s = w0("RURRUUR");
  EXPECT_EQ(base_path(s), s);
  EXPECT_EQ(base_path(bump(w0("RRRR"), {2})), w0("RRRR"));
  EXPECT_THROW(base_path(w0("RL")), invalid_argument);
  EXPECT_THROW(base_path(w0("LLU")), invalid_argument);
}

TEST(PathTheory, BasePathBoxBoundaryRoutes) {
  EXPECT_EQ(base_path(w0("LUURRR")), w0("UURR"));
  EXPECT_EQ(base_path(w0("DRRUUU")), w0("RRUU"));
}

TEST(PathTheory, BasePathCornerRule) {
  // re-enters the box only at P; meets y = n2 before x = n1
  const Walk up = w0("LUUURRRD");
  EXPECT_EQ(base_path(up), w0("UURR"));
  EXPECT_TRUE(is_good_edge_mapping(up, base_path(up), good_edge_map(up)));
  // meets x = n1 first
  const Walk right = w0("DRRRUUUL");
  EXPECT_EQ(base_path(right), w0("RRUU"));
  EXPECT_TRUE(is_good_edge_mapping(right, base_path(right), good_edge_map(right)));
}

TEST(PathTheory, BasePathReflectionWrapper) {
  const Walk w = make_walk({3, 3}, "LDLLDD");  // towards the lower left
  const Walk b = base_path_any(w);
  EXPECT_EQ(b.start, w.start);
  EXPECT_EQ(b.end(), w.end());
  EXPECT_EQ(b.length(), static_cast<std::size_t>(l1_distance(w.start, w.end())));
}

TEST(PathTheory, BasePathOfBumpedWalks) {
  RngStream rng(8, 0);
  for (int i = 0; i < 300; ++i) {
    const Walk b = sample_shortest_path(rng, 1 + rng.uniform_below(12), 1 + rng.uniform_below(12));
    const Walk a = bump(b, random_bump_set(b, rng));
    const Walk base = base_path(a);
    EXPECT_TRUE(is_monotone(base));
    EXPECT_EQ(base.start, b.start);
    EXPECT_EQ(base.end(), b.end());
  }
}

TEST(PathTheory, GoodEdgeMapExamples) {
  const Walk s = w0("RRUR");
  EXPECT_EQ(good_edge_map(s).target, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(good_edge_map(w0("RDRU")).target, (std::vector<std::size_t>{0, 2}));
}

TEST(PathTheory, GoodEdgeMapConditionsOnBumpedWalks) {
  RngStream rng(9, 0);
  for (int i = 0; i < 500; ++i) {
    const Walk b = sample_shortest_path(rng, 1 + rng.uniform_below(15), 1 + rng.uniform_below(15));
    const Walk a = bump(b, random_bump_set(b, rng));
    const GoodEdgeMap f = good_edge_map(a);
    EXPECT_TRUE(is_good_edge_mapping(a, base_path(a), f)) << to_string(a);
  }
}

TEST(PathTheory, WalkWithoutAnyGoodEdgeMapping) {
  // Goes round the top of the box and enters it from the right: every
  // crossing of row 0 happens before the walk reaches column 2.
  const Walk a = w0("LUUURRRRDDLU");
  ASSERT_TRUE(is_self_avoiding(a));
  EXPECT_EQ(base_path(a), w0("RRUU"));
  EXPECT_THROW(good_edge_map(a), error);
}

TEST(PathTheory, BumpableGoodEdgesExamples) {
  EXPECT_EQ(bumpable_good_edges(w0("RRRR"), Region::full()), (IndexSet{1, 2, 3, 4}));
  const IndexSet e = bumpable_good_edges(w0("RDRU"), Region::full());
  for (std::size_t i : e) EXPECT_TRUE(is_self_avoiding(bump(w0("RDRU"), {i})));
}

TEST(PathTheory, BumpableGoodEdgesBound) {
  RngStream rng(10, 0);
  for (int i = 0; i < 200; ++i) {
    const Walk b = sample_shortest_path(rng, 2 + rng.uniform_below(20), 2 + rng.uniform_below(20));
    const IndexSet m = random_bump_set(b, rng);
    const Walk a = bump(b, m);
    const auto n = static_cast<long>(b.length());
    const auto c = static_cast<long>(corner_count(base_path(a)));
    const auto k = static_cast<long>(m.size());
    EXPECT_GE(static_cast<long>(bumpable_good_edges(a, Region::full()).size()), n - c - 8 * k);
  }
}
