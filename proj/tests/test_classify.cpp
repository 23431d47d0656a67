#include "seifert/classify.hpp"
#include "seifert/generators.hpp"

#include <gtest/gtest.h>

using namespace seifert;

namespace {
bool has_reason(ReversalVerdict const &v, ReversalReason r) {
  return std::find(v.reasons.begin(), v.reasons.end(), r) != v.reasons.end();
}
std::string family_of(char const *text) {
  auto f = admissible_family(parse_invariants(text));
  return f.expr ? f.expr->to_string() : "deferred";
}
} // namespace

TEST(Reversal, LensSpaceBothReasons) {
  auto v = reversal_excluded(parse_invariants("(0,o1|(3,2),(1,5))"));
  EXPECT_TRUE(v.excluded);
  EXPECT_TRUE(has_reason(v, ReversalReason::CriticalFiberOrderGT2));
  EXPECT_TRUE(has_reason(v, ReversalReason::NonzeroEulerClass));
}

TEST(Reversal, ZeroEulerClassNotRuledOut) {
  auto v = reversal_excluded(parse_invariants("(0,o1|(2,1),(2,1),(1,-1))"));
  EXPECT_FALSE(v.excluded);
  EXPECT_TRUE(v.reasons.empty());
}

TEST(Reversal, EulerClassOnly) {
  auto v = reversal_excluded(parse_invariants("(0,o1|(1,3))"));
  EXPECT_TRUE(v.excluded);
  ASSERT_EQ(v.reasons.size(), 1u);
  EXPECT_EQ(v.reasons[0], ReversalReason::NonzeroEulerClass);
}

TEST(Reversal, NonOrientableBaseOutOfScope) {
  EXPECT_THROW(reversal_excluded(parse_invariants("(1,n2|(3,1),(1,1))")), OutOfScopeGeometry);
}

TEST(Classify, Families) {
  EXPECT_EQ(family_of("(0,o1|(3,2),(1,5))"), "Dih(Z_m x Z_n)");
  EXPECT_EQ(family_of("(0,o1|(2,1),(3,1),(5,4),(1,-1))"), "Dih(Z_m)");
  EXPECT_EQ(family_of("(1,n2|(3,1),(1,1))"), "Z_2 x Dih(Z_n)");
  EXPECT_EQ(family_of("(0,o1|(1,4))"), "(Z_m x H) o- Z_2");
  EXPECT_EQ(family_of("(0,o1|(1,3))"), "deferred");
  EXPECT_EQ(family_of("(0,o1|(3,1),(5,2),(1,1))"), "Dih(Z_m x Z_n)");
  EXPECT_EQ(family_of("(0,o1|(3,1),(3,1),(1,1))"), "deferred");
  EXPECT_EQ(family_of("(0,o1|(2,1),(2,1),(2,1),(1,1))"), "(Z_m x Dih(Z_3)) o- Z_2");
  EXPECT_EQ(family_of("(0,o1|(2,1),(2,1),(5,2),(1,1))"), "Dih(Z_m x Z_2)");
  EXPECT_EQ(family_of("(0,o1|(2,1),(3,1),(3,1),(1,1))"), "Dih(Z_m x Z_2)");
  EXPECT_EQ(family_of("(0,o1|(2,1),(3,1),(3,2),(1,1))"), "Dih(Z_m)");
  EXPECT_EQ(family_of("(0,o1|(2,1),(3,1),(4,1),(1,1))"), "Dih(Z_m)");
}

TEST(Classify, ProseCaveatsCarryBothReadings) {
  auto equal = admissible_family(parse_invariants("(0,o1|(2,1),(3,1),(3,1),(1,1))"));
  EXPECT_TRUE(equal.alternate.has_value());
  EXPECT_FALSE(equal.caveats.empty());
  auto oct = admissible_family(parse_invariants("(0,o1|(2,1),(3,1),(4,1),(1,1))"));
  EXPECT_TRUE(oct.alternate.has_value());
  EXPECT_FALSE(oct.caveats.empty());
}

TEST(Classify, NotEllipticThrows) {
  EXPECT_THROW(admissible_family(parse_invariants("(0,o1|(1,0))")), NotElliptic);
  EXPECT_THROW(admissible_family(parse_invariants("(0,o1|(2,1),(3,1),(7,1),(1,-1))")), NotElliptic);
}

TEST(ClassifyProperty, SingleCaseDispatch) {
  gen::Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    auto m = gen::elliptic_invariants(rng);
    EXPECT_EQ(matching_cases(m).size(), 1u) << format_invariants(m);
    auto f = admissible_family(m);
    EXPECT_FALSE(f.citations.empty());
    if (f.atlas_row)
      EXPECT_TRUE(obstruction_satisfied(atlas_row(*f.atlas_row, f.atlas_n.value_or(Integer(1))), f.obstruction_b))
          << format_invariants(m);
  }
}

TEST(ClassifyProperty, ReversalAlwaysExcludedOnEllipticSphereBases) {
  gen::Rng rng(32);
  for (int i = 0; i < 1000; ++i) {
    auto m = gen::elliptic_sphere_invariants(rng);
    auto v = reversal_excluded(m);
    EXPECT_TRUE(v.excluded);
    EXPECT_TRUE(has_reason(v, ReversalReason::NonzeroEulerClass));
  }
}
