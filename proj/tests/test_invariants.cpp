#include "seifert/generators.hpp"
#include "seifert/invariants.hpp"

#include <gtest/gtest.h>

using namespace seifert;

namespace {
SeifertInvariants sphere(std::vector<SeifertPair> pairs, long b) {
  return {0, BaseOrientation::Orientable, std::move(pairs), b};
}
} // namespace

TEST(Invariants, ParseLensSpace) {
  auto m = parse_invariants("(0,o1|(3,2),(1,5))");
  EXPECT_EQ(m, sphere({{3, 2}}, 5));
  EXPECT_EQ(format_invariants(m), "(0,o1|(3,2),(1,5))");
}

TEST(Invariants, ParseTrivial) { EXPECT_EQ(parse_invariants("(0,o1|(1,0))"), sphere({}, 0)); }

TEST(Invariants, ParseNonOrientableAndSpaces) {
  auto m = parse_invariants(" ( 1 , n2 | (3,1) , (1,1) ) ");
  EXPECT_EQ(m.orientation, BaseOrientation::NonOrientable);
  EXPECT_EQ(m.genus, 1);
  EXPECT_EQ(m.b, 1);
}

TEST(Invariants, ParseErrors) {
  EXPECT_THROW(parse_invariants("(0,o1|(3,2,(1,5))"), ParseError);
  EXPECT_THROW(parse_invariants("(0,o3|(1,0))"), ParseError);
  EXPECT_THROW(parse_invariants(""), ParseError);
  EXPECT_THROW(parse_invariants("(0,o1|(1,0)) trailing"), ParseError);
  try {
    parse_invariants("(0,o1|(3,2,(1,5))");
  } catch (ParseError const &e) {
    EXPECT_GT(e.position(), 0u);
  }
}

TEST(Invariants, RejectsInvalidPairs) {
  EXPECT_THROW(parse_invariants("(0,o1|(4,2),(1,0))"), InvalidInvariants);
  EXPECT_THROW(parse_invariants("(0,o1|(0,1),(1,0))"), ParseError);
  EXPECT_THROW(parse_invariants("(0,n2|(1,0))"), InvalidInvariants);
}

TEST(Invariants, NormalizeFoldsIntoB) {
  EXPECT_EQ(normalize(sphere({{3, 5}}, 0)), sphere({{3, 2}}, 1));
  EXPECT_EQ(normalize(sphere({{3, 2}}, 5)), sphere({{3, 2}}, 5));
  EXPECT_EQ(normalize(sphere({{3, -1}}, 0)), sphere({{3, 2}}, -1));
  EXPECT_EQ(normalize(sphere({{1, 4}, {2, 3}}, 0)), sphere({{2, 1}}, 5));
}

TEST(Invariants, EulerClass) {
  EXPECT_EQ(euler_class(sphere({}, 7)), -7);
  EXPECT_EQ(euler_class(sphere({{3, 2}}, 5)), Rational(-17, 3));
  EXPECT_EQ(euler_class(sphere({{2, 1}, {2, 1}}, -1)), 0);
}

TEST(Invariants, BaseOrbifold) {
  auto o = base_orbifold(parse_invariants("(0,o1|(3,2),(1,5))"));
  EXPECT_EQ(o.underlying, Underlying::Sphere);
  EXPECT_EQ(o.chi_orb, Rational(4, 3));
  EXPECT_EQ(base_orbifold(parse_invariants("(0,o1|(1,4))")).chi_orb, 2);
  EXPECT_EQ(base_orbifold(parse_invariants("(0,o1|(2,1),(3,1),(5,1),(1,2))")).chi_orb, Rational(1, 30));
  EXPECT_EQ(base_orbifold(parse_invariants("(1,n2|(3,1),(1,1))")).underlying, Underlying::ProjectivePlane);
  EXPECT_THROW(base_orbifold(parse_invariants("(2,o1|(1,1))")), OutOfScopeGeometry);
}

TEST(Invariants, GeometryVerdict) {
  auto v = geometry_verdict(parse_invariants("(0,o1|(3,2),(1,5))"));
  EXPECT_TRUE(v.elliptic);
  EXPECT_EQ(v.base_label, "S2(3)");
  EXPECT_FALSE(geometry_verdict(parse_invariants("(0,o1|(2,1),(2,1),(1,-1))")).elliptic);
  auto hyperbolic = geometry_verdict(parse_invariants("(0,o1|(2,1),(3,1),(7,1),(1,-1))"));
  EXPECT_FALSE(hyperbolic.elliptic);
  EXPECT_EQ(hyperbolic.chi_orb, Rational(-1, 42));
  EXPECT_FALSE(geometry_verdict(parse_invariants("(2,o1|(1,1))")).in_scope);
}

TEST(InvariantsProperty, NormalizeIdempotentAndEulerInvariant) {
  gen::Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    auto raw = gen::raw_invariants(rng);
    auto n = normalize(raw);
    EXPECT_TRUE(is_normalized(n));
    EXPECT_EQ(normalize(n), n);
    EXPECT_EQ(euler_class(n), euler_class(raw));
  }
}

TEST(InvariantsProperty, FormatParseRoundTrip) {
  gen::Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    auto n = normalize(gen::raw_invariants(rng));
    EXPECT_EQ(parse_invariants(format_invariants(n)), n) << format_invariants(n);
  }
}

TEST(InvariantsProperty, EllipticGeneratorIsElliptic) {
  gen::Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    auto m = gen::elliptic_invariants(rng);
    EXPECT_TRUE(is_normalized(m));
    EXPECT_TRUE(geometry_verdict(m).elliptic) << format_invariants(m);
  }
}
