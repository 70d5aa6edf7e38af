#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>

#include "pentaca/rules.hpp"

using namespace pentaca;

namespace {

const Orbit* orbit_of(const std::vector<Orbit>& orbits, int id) {
  for (auto& o : orbits)
    for (auto& m : o.members)
      if (m.id == id) return &o;
  return nullptr;
}

} // namespace

TEST(Rules, ParseRule) {
  Rule r = parse_rule("25 W WBWWBBWWBB W");
  EXPECT_EQ(r.id, 25);
  EXPECT_EQ(r.current, State::W);
  EXPECT_EQ(to_string(r.word), "WBWWBBWWBB");
  EXPECT_EQ(r.next, State::W);
  EXPECT_EQ(format_rule(r), "25 W WBWWBBWWBB W");
  Rule q = parse_rule("1 W WWWWWWWWWW W");
  EXPECT_EQ(pack(q.word), 0);
}

TEST(Rules, ParseErrorsCarryTheLine) {
  try {
    parse_rule("7 X WWWWWWWWWW W", 12);
    FAIL();
  } catch (const RuleParseError& e) {
    EXPECT_EQ(e.line(), 12);
    EXPECT_NE(std::string(e.what()).find("line 12"), std::string::npos);
  }
  for (const char* bad : {"", "7", "7 W WWWW W", "7 W WWWWWWWWWWW W", "x W WWWWWWWWWW W", "7 W WWWWWWWWWW W extra",
                          "7 WW WWWWWWWWWW W", "7 W WWWWWWWWWX W"})
    EXPECT_THROW(parse_rule(bad), RuleParseError) << bad;
}

TEST(Rules, TableSkipsCommentsAndBlanks) {
  auto t = parse_rule_table("# head\n\n1 W WWWWWWWWWW W  # quiet\n  \n2 B WWWWWWWWWW B\n");
  EXPECT_EQ(t.size(), 2u);
  try {
    parse_rule_table("1 W WWWWWWWWWW W\n# c\nnonsense\n");
    FAIL();
  } catch (const RuleParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Rules, ShippedTableShape) {
  auto& t = builtin_rules();
  ASSERT_EQ(t.size(), 352u);
  for (int i = 0; i < 352; ++i) EXPECT_EQ(t.rules()[i].id, i + 1);
  EXPECT_EQ(format_rule(*t.find(25)), "25 W WBWWBBWWBB W");
  EXPECT_EQ(format_rule(*t.find(1)), "1 W WWWWWWWWWW W");
  EXPECT_EQ(t.find(353), nullptr);
}

TEST(Rules, ShippedFileMatchesEmbedded) {
  std::ifstream in(PENTACA_DATA_DIR "/rules.txt");
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text, std::string(builtin_rules_text()));
  EXPECT_EQ(load_rule_table(PENTACA_DATA_DIR "/rules.txt").rules(), builtin_rules().rules());
}

TEST(Rules, LookupFindsTheRule) {
  auto& t = builtin_rules();
  for (auto& r : t.rules()) {
    const Rule* hit = t.lookup(r.current, r.word);
    ASSERT_NE(hit, nullptr);
    EXPECT_EQ(hit->id, r.id);
  }
  EXPECT_EQ(t.lookup(State::W, parse_word("BBBBBBBBBB")), nullptr);
}

TEST(Rules, ShippedTableIsDeterministic) { EXPECT_TRUE(check_determinism(builtin_rules()).empty()); }

TEST(Rules, DeterminismFindsConstructedClash) {
  auto t = parse_rule_table("25 W WBWWBBWWBB W\n26 W WBWWBBWWBB B\n");
  auto c = check_determinism(t);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].rule_a, 25);
  EXPECT_EQ(c[0].rule_b, 26);
  EXPECT_TRUE(check_determinism(RuleTable{}).empty());
  // identical duplicates are harmless
  EXPECT_TRUE(check_determinism(parse_rule_table("25 W WBWWBBWWBB W\n99 W WBWWBBWWBB W\n")).empty());
}

TEST(Rules, RotateWord) {
  EXPECT_EQ(to_string(rotate_word(parse_word("BWWWWWWWWW"), 1)), "WBWWWWWWWW");
  EXPECT_EQ(to_string(rotate_word(parse_word("BBWWBWWWWW"), 1)), "BBBWWWWWWW");
  EXPECT_EQ(to_string(rotate_word(parse_word("WWWWWBWWWW"), 2)), "WWWWWWWBWW");
  auto w = parse_word("WBWWBBWWBB");
  EXPECT_EQ(rotate_word(w, 0), w);
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) EXPECT_EQ(rotate_word(rotate_word(w, a), b), rotate_word(w, a + b));
}

TEST(Rules, RotationsOfRuleThree) {
  auto& t = builtin_rules();
  EXPECT_EQ(rotate_word(t.find(3)->word, 1), t.find(39)->word);
}

TEST(Rules, OrbitOfSixteen) {
  auto orbits = rotation_orbits(builtin_rules());
  const Orbit* o = orbit_of(orbits, 16);
  ASSERT_NE(o, nullptr);
  std::vector<std::pair<int, int>> got;
  for (auto& m : o->members) got.push_back({m.id, m.shift});
  EXPECT_EQ(got, (std::vector<std::pair<int, int>>{{16, 0}, {81, 3}, {93, 2}, {136, 4}, {320, 1}}));
  EXPECT_EQ(orbit_of(orbits, 81), o);
  EXPECT_EQ(orbit_of(orbits, 93), o);
}

TEST(Rules, OrbitsPartitionTheTable) {
  auto orbits = rotation_orbits(builtin_rules());
  std::vector<int> ids;
  for (auto& o : orbits) {
    EXPECT_EQ(o.members.front().shift, 0);
    for (auto& m : o.members) ids.push_back(m.id);
  }
  std::sort(ids.begin(), ids.end());
  ASSERT_EQ(ids.size(), 352u);
  for (int i = 0; i < 352; ++i) EXPECT_EQ(ids[i], i + 1);
}

TEST(Rules, OrbitShiftsAreConsistent) {
  auto& t = builtin_rules();
  for (auto& o : rotation_orbits(t)) {
    auto& base = t.find(o.members.front().id)->word;
    for (auto& m : o.members) EXPECT_EQ(rotate_word(base, m.shift), t.find(m.id)->word);
  }
}

TEST(Rules, SingletonOrbit) {
  auto orbits = rotation_orbits(parse_rule_table("5 W BWWWWWWWWW B\n"));
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].members.size(), 1u);
}

TEST(Rules, ConservativeRulesHaveNoRotationConflict) {
  std::vector<Rule> first;
  for (auto& r : builtin_rules().rules())
    if (r.id <= 10) first.push_back(r);
  EXPECT_TRUE(find_rotation_conflicts(RuleTable(first)).empty());
}

TEST(Rules, RotationConflictAnchors) {
  auto cs = find_rotation_conflicts(builtin_rules());
  for (RotationConflict want : {RotationConflict{21, 65, 3}, RotationConflict{147, 339, 1}, RotationConflict{251, 277, 4}})
    EXPECT_NE(std::find(cs.begin(), cs.end(), want), cs.end()) << want.rule_a << "," << want.rule_b;
  for (auto& c : cs) {
    EXPECT_LT(c.rule_a, c.rule_b);
    auto& t = builtin_rules();
    EXPECT_EQ(rotate_word(t.find(c.rule_a)->word, c.shift), t.find(c.rule_b)->word);
    EXPECT_NE(t.find(c.rule_a)->next, t.find(c.rule_b)->next);
  }
}

TEST(Rules, RotationConflictsOnSmallTable) {
  auto t = parse_rule_table("1 W BWWWWWWWWW W\n2 W WWBWWWWWWW B\n3 W WBWWWWWWWW W\n");
  auto cs = find_rotation_conflicts(t);
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0], (RotationConflict{1, 2, 2}));
  EXPECT_EQ(cs[1], (RotationConflict{2, 3, 4}));
}

TEST(Rules, TsvReports) {
  auto tsv = conflicts_tsv({{21, 65, 3}});
  EXPECT_EQ(tsv, "rule_a\trule_b\tshift\n21\t65\t3\n");
  auto o = orbits_tsv(rotation_orbits(parse_rule_table("5 W BWWWWWWWWW B\n6 W WBWWWWWWWW B\n")));
  EXPECT_EQ(o, "orbit\tstate\trule\tshift\n5\tW\t5\t0\n5\tW\t6\t1\n");
}
