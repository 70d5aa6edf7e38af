#include <gtest/gtest.h>

#include <set>

#include "pentaca/coords.hpp"

using namespace pentaca;

namespace {

NeighborMap names(std::initializer_list<const char*> list) {
  NeighborMap out;
  int k = 0;
  for (auto* s : list) out[k++] = parse_coord(s);
  return out;
}

const Grid& grid4() {
  static const Grid g(4);
  return g;
}

} // namespace

TEST(Coords, ParseAndFormat) {
  EXPECT_EQ(parse_coord("12(4)"), (TileCoord{4, 12}));
  EXPECT_EQ(parse_coord("0(0)"), kCenter);
  for (const char* s : {"1(1)", "86(2)", "4180(5)", "0(0)"}) EXPECT_EQ(to_string(parse_coord(s)), s);
}

TEST(Coords, ParseRejectsMalformed) {
  for (const char* s : {"", "12", "(4)", "12(", "0(3)", "3(0)", "3(6)", "x(1)", "1(1)x", "-1(2)", "1 (2)"})
    EXPECT_THROW(parse_coord(s), CoordError) << s;
}

TEST(Coords, LevelSizes) {
  EXPECT_EQ(tree_level_sizes(0), (std::vector<long long>{1}));
  EXPECT_EQ(tree_level_sizes(3), (std::vector<long long>{1, 3, 8, 21}));
  EXPECT_EQ(tree_level_sizes(8), (std::vector<long long>{1, 3, 8, 21, 55, 144, 377, 987, 2584}));
  long long sum = 0;
  for (auto n : tree_level_sizes(4)) sum += n;
  EXPECT_EQ(sum, 88);
  EXPECT_THROW(tree_level_sizes(-1), std::invalid_argument);
}

TEST(Coords, LevelSizesAreAlternateFibonacci) {
  auto v = tree_level_sizes(12);
  for (size_t i = 2; i < v.size(); ++i) EXPECT_EQ(v[i], 3 * v[i - 1] - v[i - 2]);
}

TEST(Coords, GridSize) {
  EXPECT_EQ(Grid(0).size(), 6);
  EXPECT_EQ(grid4().size(), 441);
  EXPECT_EQ(Grid(8).size(), 1 + 5 * 4180);
  EXPECT_TRUE(grid4().contains(parse_coord("88(3)")));
  EXPECT_FALSE(grid4().contains(parse_coord("89(3)")));
  EXPECT_THROW(grid4().id(parse_coord("89(3)")), CoordError);
}

TEST(Coords, IdsRoundTrip) {
  for (int id = 0; id < grid4().size(); ++id) EXPECT_EQ(grid4().id(grid4().coord(id)), id);
}

TEST(Coords, NodeKinds) {
  auto& g = grid4();
  for (int s = 1; s <= 5; ++s) {
    EXPECT_EQ(g.kind({s, 1}), NodeKind::White);
    EXPECT_EQ(g.kind({s, 2}), NodeKind::Black);
    EXPECT_EQ(g.kind({s, 3}), NodeKind::White);
    EXPECT_EQ(g.kind({s, 4}), NodeKind::White);
    EXPECT_EQ(g.kind({s, 5}), NodeKind::Black);
  }
}

TEST(Coords, BlackNodesSitBetweenWhiteOnes) {
  // within a level, two black nodes are never consecutive
  auto& g = grid4();
  for (int nu = 2; nu < 88; ++nu)
    if (g.level({1, nu}) == g.level({1, nu + 1}))
      EXPECT_FALSE(g.kind({1, nu}) == NodeKind::Black && g.kind({1, nu + 1}) == NodeKind::Black) << nu;
}

TEST(Coords, Levels) {
  auto& g = grid4();
  EXPECT_EQ(g.level(kCenter), -1);
  EXPECT_EQ(g.level(parse_coord("1(3)")), 0);
  EXPECT_EQ(g.level(parse_coord("4(3)")), 1);
  EXPECT_EQ(g.level(parse_coord("12(3)")), 2);
  EXPECT_EQ(g.level(parse_coord("86(2)")), 4);
  EXPECT_EQ(g.level(parse_coord("87(4)")), 4);
}

TEST(Coords, Fathers) {
  auto& g = grid4();
  EXPECT_FALSE(g.father(kCenter).has_value());
  EXPECT_EQ(*g.father(parse_coord("1(2)")), kCenter);
  EXPECT_EQ(*g.father(parse_coord("2(2)")), parse_coord("1(2)"));
  EXPECT_EQ(*g.father(parse_coord("5(2)")), parse_coord("2(2)"));
  EXPECT_EQ(*g.father(parse_coord("7(2)")), parse_coord("3(2)"));
}

// frozen from an independent implementation of the tree walk
TEST(Coords, KnownNeighbourMaps) {
  auto& g = grid4();
  EXPECT_EQ(g.neighbors(kCenter), names({"1(1)", "1(2)", "1(3)", "1(4)", "1(5)", "2(1)", "2(2)", "2(3)", "2(4)", "2(5)"}));
  EXPECT_EQ(g.neighbors(parse_coord("1(1)")),
            names({"0(0)", "2(1)", "3(1)", "4(1)", "2(2)", "1(2)", "1(5)", "7(1)", "10(1)", "5(2)"}));
  EXPECT_EQ(g.neighbors(parse_coord("2(1)")),
            names({"1(1)", "1(5)", "5(1)", "6(1)", "7(1)", "3(1)", "0(0)", "4(5)", "15(1)", "18(1)"}));
  EXPECT_EQ(g.neighbors(parse_coord("4(1)")),
            names({"1(1)", "10(1)", "11(1)", "12(1)", "5(2)", "2(2)", "3(1)", "28(1)", "31(1)", "13(2)"}));
  EXPECT_EQ(g.neighbors(parse_coord("5(2)")),
            names({"2(2)", "4(1)", "13(2)", "14(2)", "15(2)", "6(2)", "1(1)", "12(1)", "36(2)", "39(2)"}));
  Grid g6(6);
  EXPECT_EQ(g6.neighbors(parse_coord("12(4)")),
            names({"4(4)", "31(4)", "32(4)", "33(4)", "13(5)", "5(5)", "11(4)", "83(4)", "86(4)", "34(5)"}));
  EXPECT_EQ(g6.neighbors(parse_coord("33(5)")),
            names({"12(5)", "86(5)", "87(5)", "88(5)", "34(1)", "13(1)", "32(5)", "227(5)", "230(5)", "89(1)"}));
}

TEST(Coords, SideOneFacesTheFather) {
  auto& g = grid4();
  for (int id = 1; id < g.size(); ++id) {
    TileCoord c = g.coord(id);
    EXPECT_EQ(g.neighbors(c)[0], g.father(c));
  }
}

TEST(Coords, NeighbourhoodIsSymmetric) {
  Grid g(6);
  for (int id = 0; id < g.size(); ++id) {
    auto& ids = g.neighbor_ids(id);
    for (int k = 0; k < 10; ++k) {
      int x = ids[k];
      if (x < 0) continue;
      auto& back = g.neighbor_ids(x);
      // side neighbours see us on a side, vertex neighbours on a vertex
      auto first = k < 5 ? back.begin() : back.begin() + 5;
      EXPECT_NE(std::find(first, first + 5, id), first + 5) << to_string(g.coord(id)) << " pos " << k + 1;
    }
  }
}

TEST(Coords, NeighboursAreDistinct) {
  Grid g(6);
  for (int id = 0; id < g.size(); ++id) {
    if (!g.interior(id)) continue;
    std::set<int> seen(g.neighbor_ids(id).begin(), g.neighbor_ids(id).end());
    EXPECT_EQ(seen.size(), 10u);
    EXPECT_FALSE(seen.count(id));
  }
}

TEST(Coords, VertexNeighbourTouchesBothSides) {
  // vertex 6 lies between sides 5 and 1, vertex 7 between 1 and 2, ...
  Grid g(6);
  for (int id = 0; id < g.size(); ++id) {
    if (!g.interior(id)) continue;
    auto& n = g.neighbor_ids(id);
    for (int j = 0; j < 5; ++j) {
      auto& v = g.neighbor_ids(n[5 + j]);
      int a = n[(j + 4) % 5], b = n[j];
      EXPECT_NE(std::find(v.begin(), v.begin() + 5, a), v.begin() + 5);
      EXPECT_NE(std::find(v.begin(), v.begin() + 5, b), v.begin() + 5);
    }
  }
}

TEST(Coords, InteriorCoversTwoLevelsBelowTheLeaves) {
  Grid g(6);
  for (int id = 0; id < g.size(); ++id) {
    int l = g.level(g.coord(id));
    if (l <= 4) EXPECT_TRUE(g.interior(id)) << to_string(g.coord(id));
    if (l == 6) EXPECT_FALSE(g.interior(id));
  }
}

TEST(Coords, ReorientIdentityAndComposition) {
  auto nm = grid4().neighbors(parse_coord("4(1)"));
  EXPECT_EQ(reorient(nm, 0), nm);
  EXPECT_EQ(reorient(nm, 5), nm);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) EXPECT_EQ(reorient(reorient(nm, a), b), reorient(nm, (a + b) % 5));
}

TEST(Coords, ReorientMovesSideOne) {
  auto nm = grid4().neighbors(parse_coord("1(1)"));
  auto r = reorient(nm, 2);
  EXPECT_EQ(r[0], nm[2]);
  EXPECT_EQ(r[5], nm[7]);
  EXPECT_EQ(r[4], nm[1]);
  EXPECT_EQ(r[9], nm[6]);
}

TEST(Coords, CorrespondenceSizes) {
  auto p = build_patch(1);
  auto c0 = build_correspondence(p, 0);
  EXPECT_EQ(c0.to_geo.size(), 6u);
  auto p5 = build_patch(5);
  auto c4 = build_correspondence(p5, 4);
  EXPECT_EQ(c4.to_geo.size(), 441u);
  std::set<int> geo;
  for (auto& [c, g] : c4.to_geo) geo.insert(g);
  EXPECT_EQ(geo.size(), 441u);
  EXPECT_EQ(c4.to_geo.at(kCenter), 0);
}

TEST(Coords, CorrespondenceNeedsRoom) { EXPECT_THROW(build_correspondence(build_patch(3), 4), CoordError); }

TEST(Coords, GeometricVertexSixOfTheCenter) {
  auto p = build_patch(3);
  auto corr = build_correspondence(p, 2);
  auto nm = geometric_neighbors(kCenter, p, corr);
  // the one tile touching only the corner between 1(5) and 1(1)
  EXPECT_EQ(nm[5], parse_coord("2(1)"));
  EXPECT_EQ(nm[0], parse_coord("1(1)"));
}
