#include "seifert/generators.hpp"
#include "seifert/quotient.hpp"
#include "seifert/selftest.hpp"

#include <gtest/gtest.h>

using namespace seifert;

namespace {
RotationPair r(char const *text) { return parse_rotation(text); }
TorusActionSpec spec(std::vector<RotationPair> gens, bool reversing = false) { return {std::move(gens), reversing}; }
} // namespace

TEST(Quotient, InducedActionOnFilling) {
  auto f = induced_action_on_filling({r("1/6,1/3"), r("0,1/12")}, Mat2(-1, 2, -1, 3));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], r("1/6,1/6"));
  EXPECT_EQ(f[1], r("1/6,1/12"));
  EXPECT_EQ(induced_action_on_filling({r("1/5,2/5")}, Mat2::identity())[0], r("1/5,2/5"));
}

TEST(Quotient, PieceKinds) {
  auto b = quotient_piece(spec({r("1/6,2/3"), r("7/12,5/12")}, true), Mat2::identity());
  EXPECT_EQ(b.kind, PieceKind::ConwayBallBk);
  EXPECT_EQ(b.k, 6);
  auto v = quotient_piece(spec({r("0,1/3")}), Mat2::identity());
  EXPECT_EQ(v.kind, PieceKind::SolidTorusVk);
  EXPECT_EQ(v.k, 3);
  EXPECT_EQ(quotient_piece(spec({}, true), Mat2::identity()).k, 1);
  EXPECT_THROW(formula_core_order(spec({r("0,1/2"), r("1/2,0"), r("1/3,0")})), InvalidAction);
}

TEST(Quotient, TorusProjection) {
  EXPECT_TRUE(torus_projection_matrix(spec({r("1/6,1/6"), r("0,1/12")})).same_entries(Mat2(6, 12, 0, 12)));
  EXPECT_TRUE(torus_projection_matrix(spec({r("0,1/7")})).same_entries(Mat2(1, 0, 0, 7)));
  EXPECT_TRUE(torus_projection_matrix(spec({r("1/2,1/4")})).same_entries(Mat2(1, 2, 0, 4)));
  EXPECT_TRUE(torus_projection_matrix(spec({})).same_entries(Mat2::identity()));
  EXPECT_FALSE(torus_l_valid(spec({r("1/2,1/4")}), 1));
  EXPECT_TRUE(torus_l_valid(spec({r("1/2,1/4")}), 6));
}

TEST(Quotient, BoundaryProjection) {
  EXPECT_TRUE(boundary_projection_matrix(spec({r("1/6,1/6"), r("1/6,1/4")}), Integer(6))
                  .same_entries(Mat2(6, 0, 6, 12)));
  EXPECT_TRUE(boundary_projection_matrix(spec({r("1/6,2/3"), r("7/12,5/12")}), Integer(6))
                  .same_entries(Mat2(12, 0, 6, 6)));
  EXPECT_TRUE(boundary_projection_matrix(spec({}), Integer(0)).same_entries(Mat2::identity()));
}

TEST(Quotient, ProjectedFillingWorkedExample) {
  FillingOverrides ov;
  ov.l = 12;
  ov.z = 6;
  auto p = projected_filling(spec({r("1/6,1/3"), r("0,1/12")}, true), Mat2(-1, 2, -1, 3), ov);
  EXPECT_TRUE(p.piece.slope.same_entries(Mat2(-7, 4, -5, 3)));
  EXPECT_EQ(p.piece.k, 12);
}

TEST(Quotient, TrivialActionKeepsFilling) {
  Mat2 d(2, 1, 1, 1);
  auto p = projected_filling(spec({}), d, {});
  EXPECT_TRUE(p.piece.slope.same_entries(d));
  EXPECT_EQ(p.piece.k, 1);
}

TEST(Quotient, DefaultFillings) {
  EXPECT_TRUE(default_filling({3, 2}).same_entries(Mat2(-1, 2, -1, 3)));
  EXPECT_TRUE(default_filling({1, 5}).same_entries(Mat2(-1, 5, 0, 1)));
  gen::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    long q = gen::uniform(rng, 1, 30), p = gen::uniform(rng, 0, 29);
    if (std::gcd(p, q) != 1)
      continue;
    auto d = default_filling({q, p});
    EXPECT_EQ(d.det(), -1);
    EXPECT_EQ(d(0, 1), p);
    EXPECT_EQ(d(1, 1), q);
  }
}

TEST(Quotient, WorkedExampleAssembly) {
  auto in = worked_example_input();
  auto q = assemble_quotient(in.invariants, in.action);
  EXPECT_EQ(q.base_kind, BaseKind::FoldedBall);
  EXPECT_EQ(q.arc_data.arcs, 4);
  ASSERT_EQ(q.pieces.size(), 2u);
  EXPECT_EQ(q.pieces[0].piece.k, 12);
  EXPECT_EQ(q.pieces[1].piece.k, 6);
  EXPECT_EQ(slope_of(q.pieces[0].piece.slope), make_slope(4, 3));
  EXPECT_EQ(slope_of(q.pieces[1].piece.slope), make_slope(7, 2));
  EXPECT_EQ(q.constraint_sum, 0);
  ASSERT_EQ(q.warnings.size(), 1u);
  EXPECT_NE(q.warnings[0].find("published core order 4"), std::string::npos);
}

TEST(Quotient, FiberPreservingProduct) {
  ActionDescription a;
  a.generators = {r("0,1/3")};
  auto q = assemble_quotient(parse_invariants("(0,o1|(2,1),(1,1))"), a);
  EXPECT_EQ(q.base_kind, BaseKind::ProductOverQuotientSurface);
  EXPECT_EQ(q.arc_data.arcs, 0);
  for (auto const &p : q.pieces)
    EXPECT_EQ(p.piece.kind, PieceKind::SolidTorusVk);
  EXPECT_EQ(l_constraint_sum(q), 0);
}

TEST(Quotient, PinnedLValuesMustBalance) {
  auto in = worked_example_input();
  in.action.l_overrides = {Integer(12), Integer(24)};
  EXPECT_THROW(assemble_quotient(in.invariants, in.action), ConstraintViolation);
}

TEST(Quotient, InvalidDescriptions) {
  auto in = worked_example_input();
  auto a = in.action;
  a.involution.reset();
  EXPECT_THROW(assemble_quotient(in.invariants, a), InvalidAction);
  a = in.action;
  a.involution->boundary_permutation = {1, 1};
  EXPECT_THROW(assemble_quotient(in.invariants, a), InvalidAction);
  a = in.action;
  a.boundaries[0].filling = Mat2(2, 0, 0, 1);
  EXPECT_THROW(assemble_quotient(in.invariants, a), NonUnimodular);
}

TEST(QuotientProperty, RandomAssembliesBalanceAndRemultiply) {
  gen::Rng rng(42);
  int ok = 0;
  for (int i = 0; i < 2000 && ok < 500; ++i) {
    auto c = gen::quotient_case(rng);
    QuotientDescriptor q;
    try {
      q = assemble_quotient(c.invariants, c.action);
    } catch (ConstraintViolation const &) {
      continue;
    } catch (NonIntegralSolution const &) {
      continue;
    }
    ++ok;
    EXPECT_EQ(l_constraint_sum(q), 0);
    for (auto const &cl : q.classes) {
      Mat2 d(cl.filling(0, 0), cl.filling(0, 1), cl.filling(1, 0), cl.filling(1, 1), "dV", "T");
      auto const &p = cl.projected;
      EXPECT_TRUE(compose(p.torus_projection, d).same_entries(compose(p.piece.slope, p.boundary_projection)));
      EXPECT_EQ(p.piece.k, core_order(p.boundary_generators));
      EXPECT_EQ(cl.formula_k, cl.oracle_k);
    }
  }
  EXPECT_GE(ok, 500);
}
