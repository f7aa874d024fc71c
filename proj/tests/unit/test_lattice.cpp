#include <gtest/gtest.h>

#include "saw/aztec.hpp"
#include "saw/lattice.hpp"

using namespace saw;

TEST(Lattice, StepExamples) {
  EXPECT_EQ(step({0, 0}, Direction::R), (Point{1, 0}));
  EXPECT_EQ(step({2, 3}, Direction::D), (Point{2, 2}));
  EXPECT_EQ(step({-1, 0}, Direction::L), (Point{-2, 0}));
}

TEST(Lattice, StepThenReverseIsIdentity) {
  for (coord_t x = -3; x <= 3; ++x)
    for (coord_t y = -3; y <= 3; ++y)
      for (Direction d : kDirections) EXPECT_EQ(step(step({x, y}, d), reverse(d)), (Point{x, y}));
}

TEST(Lattice, PointsOf) {
  EXPECT_EQ(points_of(make_walk({0, 0}, "RU")), (std::vector<Point>{{0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(points_of(make_walk({0, 0}, "")), (std::vector<Point>{{0, 0}}));
  EXPECT_EQ(points_of(make_walk({0, 0}, "RL")), (std::vector<Point>{{0, 0}, {1, 0}, {0, 0}}));
}

TEST(Lattice, PointsRoundTrip) {
  const Walk w = make_walk({4, -2}, "UURDDDLLUR");
  const auto pts = points_of(w);
  EXPECT_EQ(walk_from_points(pts), w);
}

TEST(Lattice, SelfAvoiding) {
  EXPECT_TRUE(is_self_avoiding(make_walk({0, 0}, "RU")));
  EXPECT_FALSE(is_self_avoiding(make_walk({0, 0}, "RL")));
  EXPECT_FALSE(is_self_avoiding(make_walk({0, 0}, "RULD")));
}

TEST(Lattice, TextCodecRoundTrip) {
  const Walk w = make_walk({-3, 17}, "UDLRRRUL");
  EXPECT_EQ(to_string(w), "(-3,17)UDLRRRUL");
  EXPECT_EQ(parse_walk(to_string(w)), w);
  EXPECT_THROW(parse_walk("(1,2UD"), invalid_argument);
  EXPECT_THROW(parse_walk("(1,2)UX"), invalid_argument);
}

TEST(Lattice, BoxRejectsUnorderedCorners) {
  EXPECT_THROW(LatticeBox({1, 0}, {0, 0}), invalid_argument);
  EXPECT_EQ(LatticeBox({0, 0}, {2, 3}).size(), 12u);
}

TEST(Lattice, BoundaryOfBox) {
  const auto b = boundary(Region::box(LatticeBox{{0, 0}, {2, 2}}));
  EXPECT_EQ(b.size(), 8u);
  EXPECT_EQ(std::count(b.begin(), b.end(), Point{1, 1}), 0);
}

TEST(Lattice, BoundaryOfSinglePoint) {
  EXPECT_EQ(boundary(Region::points({{0, 0}})), (std::vector<Point>{{0, 0}}));
}

TEST(Lattice, BoundaryOfAztecPrimal) {
  const auto b = boundary(aztec_region(2));
  EXPECT_EQ(b.size(), 8u);
  for (Point p : b) EXPECT_EQ(std::abs(p.x) + std::abs(p.y), 2);
}

TEST(Lattice, BoundaryNeedsBoundedRegion) {
  try {
    boundary(Region::full());
    FAIL();
  } catch (const invalid_argument& e) {
    EXPECT_STREQ(e.what(), "boundary requires bounded region");
  }
}

TEST(Lattice, BoundaryProperties) {
  const Region r = Region::predicate("disc", LatticeBox{{-5, -5}, {5, 5}}, [](Point p) { return p.x * p.x + p.y * p.y <= 20; });
  const auto b = boundary(r);
  PointSet bs(b.begin(), b.end());
  for (Point p : r.vertices()) {
    if (bs.count(p)) continue;
    for (Direction d : kDirections) EXPECT_TRUE(r.contains(step(p, d)));
  }
  for (Point p : b) EXPECT_TRUE(r.contains(p));
}

TEST(Lattice, BoundaryPointsInBox) {
  const Region a2 = aztec_region(2);
  EXPECT_EQ(boundary_points_in_box(a2, LatticeBox{{-2, 0}, {2, 0}}), 2u);
  EXPECT_EQ(boundary_points_in_box(a2, LatticeBox{{0, 0}, {2, 2}}), 3u);
  EXPECT_EQ(boundary_points_in_box(a2, LatticeBox{{0, 0}, {0, 0}}), 0u);
}

TEST(Lattice, RestrictedRegion) {
  const Region r = Region::full().restricted_to(LatticeBox{{0, 0}, {3, 3}});
  EXPECT_TRUE(r.is_bounded());
  EXPECT_TRUE(r.contains({3, 3}));
  EXPECT_FALSE(r.contains({4, 3}));
}

TEST(Lattice, BfsDistance) {
  EXPECT_EQ(bfs_distance(aztec_region(3), {-3, 0}, {3, 0}), 6);
  EXPECT_EQ(bfs_distance(Region::points({{0, 0}, {5, 5}}), {0, 0}, {5, 5}), -1);
}
