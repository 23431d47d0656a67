#include "seifert/generators.hpp"
#include "seifert/lattice.hpp"

#include <gtest/gtest.h>

using namespace seifert;

TEST(Lattice, Compose) {
  EXPECT_TRUE(compose(Mat2::identity(), Mat2(2, 3, 5, 7)).same_entries(Mat2(2, 3, 5, 7)));
  EXPECT_TRUE(compose(Mat2(-1, 5, 0, 1), Mat2(-1, 5, 0, 1)).same_entries(Mat2::identity()));
  EXPECT_TRUE(compose(Mat2(6, 12, 0, 12), Mat2(-1, 2, -1, 3)).same_entries(Mat2(-18, 48, -12, 36)));
}

TEST(Lattice, FramesMustAgree) {
  Mat2 pt(6, 12, 0, 12, "T", "T'");
  Mat2 d(-1, 2, -1, 3, "dV", "T");
  Mat2 pv(6, 0, 6, 12, "dV", "dV'");
  auto m = compose(pt, d);
  EXPECT_EQ(m.source_frame, "dV");
  EXPECT_EQ(m.target_frame, "T'");
  EXPECT_THROW(compose(pt, pv), FrameMismatch);
}

TEST(Lattice, InvertRational) {
  auto inv = invert_rational(Mat2(6, 0, 6, 12));
  EXPECT_EQ(inv(0, 0), Rational(1, 6));
  EXPECT_EQ(inv(0, 1), 0);
  EXPECT_EQ(inv(1, 0), Rational(-1, 12));
  EXPECT_EQ(inv(1, 1), Rational(1, 12));
  EXPECT_THROW(invert_rational(Mat2(0, 0, 0, 0)), SingularMatrix);
}

TEST(Lattice, SolveConjugateWorkedExample) {
  EXPECT_TRUE(solve_conjugate(Mat2(6, 12, 0, 12), Mat2(-1, 2, -1, 3), Mat2(6, 0, 6, 12))
                  .same_entries(Mat2(-7, 4, -5, 3)));
  EXPECT_TRUE(solve_conjugate(Mat2(6, 12, 0, 12), Mat2(-1, 5, 0, 1), Mat2(12, 0, 6, 6))
                  .same_entries(Mat2(-4, 7, -1, 2)));
  Mat2 m(2, 1, 1, 1);
  EXPECT_TRUE(solve_conjugate(Mat2::identity(), m, Mat2::identity()).same_entries(m));
}

TEST(Lattice, SolveConjugateRejectsFractions) {
  EXPECT_THROW(solve_conjugate(Mat2::identity(), Mat2::identity(), Mat2(2, 0, 0, 1)), NonIntegralSolution);
}

TEST(LatticeProperty, SolveRecoversFactor) {
  gen::Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    Mat2 dprime = gen::unimodular(rng), d = gen::unimodular(rng);
    long a = gen::uniform(rng, 1, 9), b = gen::uniform(rng, 1, 9);
    Mat2 pv(a, 0, gen::uniform(rng, 0, a * b - 1), b);
    auto dinv = invert_rational(d);
    Mat2 d_inv(dinv(0, 0).get_num(), dinv(0, 1).get_num(), dinv(1, 0).get_num(), dinv(1, 1).get_num());
    Mat2 pt = compose(compose(dprime, pv), d_inv);
    Mat2 sol = solve_conjugate(pt, d, pv);
    EXPECT_TRUE(sol.same_entries(dprime));
    EXPECT_TRUE(compose(pt, d).same_entries(compose(sol, pv)));
  }
}

TEST(Lattice, SlopeCanonicalSign) {
  EXPECT_EQ(make_slope(-4, -3), make_slope(4, 3));
  EXPECT_EQ(make_slope(-4, -3).q, 3);
  auto s = slope_of(Mat2(-7, 4, -5, 3));
  EXPECT_EQ(s.p, 4);
  EXPECT_EQ(s.q, 3);
}

TEST(Lattice, LensFromTrivialFillings) {
  auto l5 = lens_from_trivial_fillings(5);
  EXPECT_EQ(l5.p, 10);
  EXPECT_EQ(l5.q, 1);
  auto l1 = lens_from_trivial_fillings(1);
  EXPECT_TRUE(l1.gluing.same_entries(Mat2(1, -2, 0, -1)));
  EXPECT_EQ(lens_from_trivial_fillings(0).p, 0);
  EXPECT_TRUE(trivial_filling(3).same_entries(Mat2(-1, 3, 0, 1)));
}
