#include "seifert/generators.hpp"
#include "seifert/numeric.hpp"

#include <gtest/gtest.h>

using namespace seifert;

TEST(Numeric, GcdLcmSigns) {
  EXPECT_EQ(gcd(Integer(-12), Integer(18)), 6);
  EXPECT_EQ(gcd(Integer(0), Integer(-5)), 5);
  EXPECT_EQ(lcm(Integer(4), Integer(6)), 12);
  EXPECT_EQ(lcm(Integer(0), Integer(6)), 0);
  EXPECT_EQ(lcm(Integer(-4), Integer(6)), 12);
}

TEST(Numeric, FloorDivision) {
  EXPECT_EQ(floor_div(Integer(-7), Integer(3)), -3);
  EXPECT_EQ(mod_floor(Integer(-7), Integer(3)), 2);
  EXPECT_EQ(floor_div(Integer(-6), Integer(3)), -2);
  EXPECT_ANY_THROW(floor_div(Integer(1), Integer(0)));
  EXPECT_ANY_THROW(mod_floor(Integer(7), Integer(-3)));
}

TEST(Numeric, FloorDivisionProperty) {
  gen::Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    Integer a = gen::uniform(rng, -1000, 1000), m = gen::uniform(rng, 1, 50);
    Integer r = mod_floor(a, m);
    EXPECT_GE(r, 0);
    EXPECT_LT(r, m);
    EXPECT_EQ(floor_div(a, m) * m + r, a);
  }
}

TEST(Numeric, Rationals) {
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational(" -1/3 "), Rational(-1, 3));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(frac_part(Rational(-1, 3)), Rational(2, 3));
  EXPECT_TRUE(is_integral(make_rational(4, 2)));
  EXPECT_EQ(to_string(make_rational(-4, 6)), "-2/3");
  EXPECT_EQ(make_rational(Integer(2), Integer(-4)), Rational(-1, 2));
}

TEST(Numeric, Int64Range) {
  EXPECT_EQ(to_int64(Integer(-5)), -5);
  Integer big("123456789012345678901234567890");
  EXPECT_FALSE(to_int64(big).has_value());
}

TEST(Numeric, InverseResidueOfMinusOne) {
  // least z >= 0 with a z == -1 (mod m)
  EXPECT_EQ(inverse_residue_of_minus_one(Integer(2), Integer(3)), 1);
  EXPECT_EQ(inverse_residue_of_minus_one(Integer(5), Integer(1)), 0);
  EXPECT_THROW(inverse_residue_of_minus_one(Integer(2), Integer(4)), std::domain_error);
}
