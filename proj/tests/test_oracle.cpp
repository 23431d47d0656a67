#include "seifert/oracle.hpp"
#include "seifert/quotient.hpp"

#include <gtest/gtest.h>

using namespace seifert;

namespace {
RotationPair r(char const *text) { return parse_rotation(text); }
} // namespace

TEST(Rotation, ParseAndReduce) {
  auto g = parse_rotation("(7/6, -1/3)");
  EXPECT_EQ(g.alpha, Rational(1, 6));
  EXPECT_EQ(g.beta, Rational(2, 3));
  EXPECT_EQ(to_string(g), "(1/6,2/3)");
  EXPECT_THROW(parse_rotation("1/2"), std::invalid_argument);
}

TEST(Rotation, TransformAndFlip) {
  EXPECT_EQ(transform_inverse(Mat2(-1, 2, -1, 3), r("1/6,1/3")), r("1/6,1/6"));
  EXPECT_EQ(transform_inverse(Mat2::identity(), r("1/5,2/7")), r("1/5,2/7"));
  EXPECT_EQ(transform_inverse(Mat2(-1, 5, 0, 1), r("0,11/12")), r("7/12,11/12"));
  EXPECT_EQ(flip_second(r("1/6,1/3")), r("1/6,2/3"));
  EXPECT_THROW(transform_inverse(Mat2(2, 0, 0, 1), r("0,0")), NonUnimodular);
}

TEST(Oracle, GroupOrders) {
  EXPECT_EQ(generate({}).order(), 1u);
  EXPECT_EQ(generate({r("1/2,1/4")}).order(), 4u);
  auto g = generate({r("1/6,1/6"), r("1/6,1/4")});
  EXPECT_EQ(g.order(), 72u);
  EXPECT_TRUE(g.contains(r("0,1/12")));
}

TEST(Oracle, CoreOrders) {
  EXPECT_EQ(core_order({r("1/6,1/3")}), 1);
  EXPECT_EQ(core_order({r("1/2,1/4")}), 2);
  EXPECT_EQ(core_order({r("0,1/7")}), 7);
  EXPECT_EQ(core_order({r("1/6,1/6"), r("1/6,1/4")}), 12);
  EXPECT_EQ(core_order({r("1/6,2/3"), r("7/12,5/12")}), 6);
  EXPECT_EQ(core_order({}), 1);
}

TEST(Oracle, ClosedForms) {
  EXPECT_EQ(core_order_cyclic(r("1/6,1/3")), 1);
  EXPECT_EQ(core_order_cyclic(r("1/2,1/4")), 2);
  EXPECT_EQ(core_order_cyclic(r("0,1/5")), 5);
  EXPECT_EQ(core_order_bicyclic(r("1/6,1/6"), r("1/6,1/4")), 12);
  EXPECT_EQ(core_order_bicyclic(r("1/6,2/3"), r("7/12,5/12")), 6);
  EXPECT_EQ(core_order_bicyclic(r("0,0"), r("0,1/9")), 9);
}

TEST(Oracle, ReducedFractions) {
  auto f = reduced_fractions(4);
  EXPECT_EQ(f.size(), 6u); // 0, 1/2, 1/3, 2/3, 1/4, 3/4
  EXPECT_EQ(reduced_fractions(12).size(), 46u);
}

TEST(Oracle, SweepsAreClean) {
  SweepOptions o;
  o.max_denominator = 1;
  auto trivial = sweep(SweepFormula::Bicyclic, o);
  EXPECT_EQ(trivial.exhaustive_cases, 1u);
  EXPECT_TRUE(trivial.clean());

  o.max_denominator = 12;
  EXPECT_TRUE(sweep(SweepFormula::Cyclic, o).clean());
  o.max_denominator = 5;
  o.random_cases = 200;
  auto bi = sweep(SweepFormula::Bicyclic, o);
  EXPECT_EQ(bi.random_cases, 200u);
  EXPECT_TRUE(bi.clean());
}

TEST(Oracle, FormulaNames) {
  EXPECT_EQ(parse_sweep_formula("cyclic-core"), SweepFormula::Cyclic);
  EXPECT_EQ(std::string(to_string(SweepFormula::Bicyclic)), "bicyclic-core");
  EXPECT_THROW(parse_sweep_formula("quadratic"), std::invalid_argument);
}
