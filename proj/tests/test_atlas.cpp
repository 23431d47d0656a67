#include "seifert/atlas.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace seifert;

TEST(Atlas, RowCount) {
  auto rows = atlas_rows();
  ASSERT_EQ(rows.size(), static_cast<std::size_t>(kAtlasRowCount));
  for (std::size_t i = 0; i < rows.size(); ++i)
    EXPECT_EQ(rows[i].number, static_cast<int>(i + 1));
}

TEST(Atlas, IcosahedralRow) {
  auto r = atlas_row(7);
  EXPECT_EQ(r.group.to_string(), "A5");
  EXPECT_EQ(r.branch_data.to_string(), "(2,3,5)");
  ASSERT_EQ(r.orbit_numbers.size(), 3u);
  EXPECT_EQ(r.orbit_numbers[0].evaluate(), 6);
  EXPECT_EQ(r.orbit_numbers[1].evaluate(), 10);
  EXPECT_EQ(r.orbit_numbers[2].evaluate(), 15);
  EXPECT_EQ(r.lcm.evaluate(), 30);
  EXPECT_EQ(r.index_over_lcm, 1);
  EXPECT_EQ(r.oc_rule, OcRule::AllB);
}

TEST(Atlas, TrivialRow) {
  auto r = atlas_row(1);
  EXPECT_EQ(r.group.kind(), GroupExpr::Kind::Trivial);
  EXPECT_EQ(r.lcm.evaluate(), 1);
  EXPECT_EQ(r.oc_rule, OcRule::AllB);
}

TEST(Atlas, InstantiateDihedralRow) {
  auto r = atlas_row(3, Integer(2));
  EXPECT_EQ(r.group.to_string(), "Dih(Z_4)");
  EXPECT_EQ(r.group.order(), Integer(8));
  std::vector<Integer> orbits;
  for (auto const &p : r.orbit_numbers)
    orbits.push_back(p.evaluate());
  EXPECT_EQ(orbits, (std::vector<Integer>{2, 4, 4}));
  EXPECT_EQ(r.lcm.evaluate(), 4);
  EXPECT_EQ(r.index_over_lcm, 2);
  EXPECT_EQ(r.oc_rule, OcRule::BEven);
  EXPECT_THROW(atlas_row(3, Integer(0)), std::invalid_argument);
  EXPECT_FALSE(atlas_row(3).concrete());
}

TEST(Atlas, ObstructionRule) {
  EXPECT_TRUE(obstruction_satisfied(atlas_row(3, Integer(1)), 2));
  EXPECT_FALSE(obstruction_satisfied(atlas_row(3, Integer(1)), 1));
  EXPECT_TRUE(obstruction_satisfied(atlas_row(4, Integer(1)), 1));
}

TEST(Atlas, AuditReportsRowSixBothWays) {
  auto a = recompute_lcm_index(atlas_row(6));
  EXPECT_EQ(a.group_order, 24);
  EXPECT_EQ(a.table_lcm, 12);
  EXPECT_EQ(a.recomputed_lcm, 24);
  EXPECT_FALSE(a.lcm_matches());
  EXPECT_TRUE(a.order_matches());
  ASSERT_FALSE(a.notes.empty());
  EXPECT_THROW(require_consistent(atlas_row(6)), std::exception);
  EXPECT_NO_THROW(require_consistent(atlas_row(4, Integer(1))));
}

TEST(Atlas, AuditRowSevenOrder) {
  auto a = recompute_lcm_index(atlas_row(7));
  EXPECT_EQ(a.group_order, 60);
  EXPECT_FALSE(a.order_matches());
}

TEST(Atlas, AuditRequiresConcreteRow) { EXPECT_THROW(recompute_lcm_index(atlas_row(3)), std::invalid_argument); }

TEST(AtlasProperty, RuleMatchesIndexAndParity) {
  for (long n = 1; n <= 6; ++n) {
    for (auto const &row : atlas_rows(Integer(n))) {
      auto a = recompute_lcm_index(row);
      EXPECT_TRUE(a.rule_matches_index()) << "row " << row.number << " n " << n;
      auto order = row.group.order();
      ASSERT_TRUE(order.has_value());
      auto kind = row.group.kind();
      if (kind != GroupExpr::Kind::Trivial && kind != GroupExpr::Kind::Cyclic)
        EXPECT_EQ(*order % 2, 0) << "row " << row.number;
    }
  }
}

TEST(AtlasProperty, InstantiationTouchesOnlyParameterizedFields) {
  auto at2 = atlas_rows(Integer(2));
  auto at3 = atlas_rows(Integer(3));
  auto symbolic = atlas_rows();
  for (std::size_t i = 0; i < symbolic.size(); ++i) {
    EXPECT_EQ(at2[i].number, at3[i].number);
    EXPECT_EQ(at2[i].underlying, at3[i].underlying);
    EXPECT_EQ(at2[i].oc_rule, at3[i].oc_rule);
    EXPECT_EQ(at2[i].generators, at3[i].generators);
    EXPECT_EQ(at2[i].index_over_lcm, at3[i].index_over_lcm);
    if (symbolic[i].concrete()) {
      EXPECT_EQ(at2[i].group, at3[i].group);
      EXPECT_EQ(at2[i].orbit_numbers, at3[i].orbit_numbers);
    }
  }
}
