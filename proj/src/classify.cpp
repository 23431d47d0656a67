#include "seifert/classify.hpp"

#include <algorithm>

namespace seifert {

char const *to_string(ReversalReason r) {
  return r == ReversalReason::CriticalFiberOrderGT2 ? "critical-fiber-order-gt-2"
                                                    : "nonzero-euler-class";
}

ReversalVerdict reversal_excluded(SeifertInvariants const &raw) {
  if (raw.orientation != BaseOrientation::Orientable)
    throw OutOfScopeGeometry("the orientation-reversal exclusions concern orientable base surfaces");
  SeifertInvariants m = normalize(raw);
  ReversalVerdict v;
  bool big_fiber = std::any_of(m.pairs.begin(), m.pairs.end(),
                               [](SeifertPair const &p) { return p.q > 2; });
  if (big_fiber) {
    v.reasons.push_back(ReversalReason::CriticalFiberOrderGT2);
    v.citations.push_back("reversal-excluded-by-critical-fiber");
  }
  if (euler_class(m) != 0) {
    v.reasons.push_back(ReversalReason::NonzeroEulerClass);
    v.citations.push_back("reversal-excluded-by-euler-class");
  }
  v.excluded = !v.reasons.empty();
  v.note = v.excluded ? "every finite fiber-preserving action is orientation-preserving"
                      : "not ruled out; this does not assert that a reversing action exists";
  return v;
}

char const *to_string(FamilyCase c) {
  switch (c) {
  case FamilyCase::SphereEvenB: return "sphere-even-b";
  case FamilyCase::SphereOddB: return "sphere-odd-b";
  case FamilyCase::OneCone: return "one-critical-fiber";
  case FamilyCase::TwoDistinctCones: return "two-distinct-critical-fibers";
  case FamilyCase::TwoEqualCones: return "two-equal-critical-fibers";
  case FamilyCase::DihedralAllEqual: return "dihedral-base-three-equal-fibers";
  case FamilyCase::DihedralTwoEqual: return "dihedral-base-two-equal-fibers";
  case FamilyCase::ProjectiveCone: return "projective-base-one-critical-fiber";
  case FamilyCase::TetrahedralEqual: return "tetrahedral-base-equal-fibers";
  case FamilyCase::TetrahedralDistinct: return "tetrahedral-base-distinct-fibers";
  case FamilyCase::OctahedralOrIcosahedral: return "octahedral-or-icosahedral-base";
  case FamilyCase::ProjectivePlaneNoCone: return "projective-base-no-critical-fiber";
  }
  return "?";
}

namespace {

using G = GroupExpr;

G zm() { return G::cyclic(Param::linear('m', 1)); }
G zn() { return G::cyclic(Param::linear('n', 1)); }
G z(long k) { return G::cyclic(Integer(k)); }

struct Shape {
  bool sphere = false;
  bool projective = false;
  std::vector<SeifertPair> pairs; // sorted by (q, p)
  std::vector<Integer> cones;     // sorted
};

Shape shape_of(SeifertInvariants const &m) {
  Shape s;
  s.sphere = m.orientation == BaseOrientation::Orientable && m.genus == 0;
  s.projective = m.orientation == BaseOrientation::NonOrientable && m.genus == 1;
  s.pairs = m.pairs;
  std::sort(s.pairs.begin(), s.pairs.end(), [](SeifertPair const &x, SeifertPair const &y) {
    return x.q != y.q ? x.q < y.q : x.p < y.p;
  });
  for (auto const &p : s.pairs)
    s.cones.push_back(p.q);
  return s;
}

bool cones_are(Shape const &s, std::initializer_list<long> want) {
  if (s.cones.size() != want.size())
    return false;
  auto it = want.begin();
  for (auto const &c : s.cones)
    if (c != *it++)
      return false;
  return true;
}

bool is_even(Integer const &b) { return mod_floor(b, 2) == 0; }

// Hypotheses of each case on normalized invariants with positive orbifold Euler characteristic.
bool holds(FamilyCase c, Shape const &s, Integer const &b) {
  auto n = s.cones.size();
  switch (c) {
  case FamilyCase::SphereEvenB: return s.sphere && n == 0 && is_even(b);
  case FamilyCase::SphereOddB: return s.sphere && n == 0 && !is_even(b);
  case FamilyCase::OneCone: return s.sphere && n == 1;
  case FamilyCase::TwoDistinctCones: return s.sphere && n == 2 && !(s.pairs[0] == s.pairs[1]);
  case FamilyCase::TwoEqualCones: return s.sphere && n == 2 && s.pairs[0] == s.pairs[1];
  case FamilyCase::DihedralAllEqual: return s.sphere && cones_are(s, {2, 2, 2});
  case FamilyCase::DihedralTwoEqual:
    return s.sphere && n == 3 && s.cones[0] == 2 && s.cones[1] == 2 && s.cones[2] >= 3;
  case FamilyCase::ProjectiveCone: return s.projective && n == 1;
  case FamilyCase::TetrahedralEqual:
    return s.sphere && cones_are(s, {2, 3, 3}) && s.pairs[1] == s.pairs[2];
  case FamilyCase::TetrahedralDistinct:
    return s.sphere && cones_are(s, {2, 3, 3}) && !(s.pairs[1] == s.pairs[2]);
  case FamilyCase::OctahedralOrIcosahedral:
    return s.sphere && (cones_are(s, {2, 3, 4}) || cones_are(s, {2, 3, 5}));
  case FamilyCase::ProjectivePlaneNoCone: return s.projective && n == 0;
  }
  return false;
}

constexpr FamilyCase kAllCases[] = {
    FamilyCase::SphereEvenB,         FamilyCase::SphereOddB,
    FamilyCase::OneCone,             FamilyCase::TwoDistinctCones,
    FamilyCase::TwoEqualCones,       FamilyCase::DihedralAllEqual,
    FamilyCase::DihedralTwoEqual,    FamilyCase::ProjectiveCone,
    FamilyCase::TetrahedralEqual,    FamilyCase::TetrahedralDistinct,
    FamilyCase::OctahedralOrIcosahedral, FamilyCase::ProjectivePlaneNoCone,
};

std::string lens_reference_caveat(std::string const &what) {
  return what + "; actions on these lens spaces are classified elsewhere and are not derived here";
}

} // namespace

std::vector<FamilyCase> matching_cases(SeifertInvariants const &raw) {
  SeifertInvariants m = normalize(raw);
  Shape s = shape_of(m);
  std::vector<FamilyCase> out;
  for (auto c : kAllCases)
    if (holds(c, s, m.b))
      out.push_back(c);
  return out;
}

GroupFamily admissible_family(SeifertInvariants const &raw) {
  SeifertInvariants m = normalize(raw);
  GeometryVerdict verdict = geometry_verdict(m);
  if (!verdict.elliptic)
    throw NotElliptic(format_invariants(m) + " is not elliptic (chi_orb = " +
                      to_string(verdict.chi_orb) + ", e = " + to_string(verdict.euler_class) + ")");
  auto cases = matching_cases(m);
  if (cases.size() != 1)
    throw std::logic_error("classification dispatch matched " + std::to_string(cases.size()) +
                           " cases for " + format_invariants(m));

  GroupFamily f;
  f.dispatch_case = cases.front();
  f.source = to_string(f.dispatch_case);
  f.obstruction_b = m.b;
  f.citations.push_back("elliptic-iff-positive-chi-and-nonzero-euler-class");
  f.citations.push_back("reversal-excluded-by-euler-class");

  switch (f.dispatch_case) {
  case FamilyCase::SphereEvenB:
    f.expr = G::anti_semidirect_z2(G::product(zm(), G::rotation_group_of_s2()));
    f.caveats.push_back("H is any finite group acting orientation-preservingly on S2 "
                        "(action table rows 1 to 7); these are the lens spaces L(2b,1)");
    f.caveats.push_back(lens_reference_caveat("only even b is covered"));
    f.citations.push_back("group-bound-from-s2-action");
    f.citations.push_back("lens-space-from-two-trivial-fillings");
    break;
  case FamilyCase::SphereOddB:
    f.caveats.push_back(lens_reference_caveat(
        "odd b: the obstruction condition cannot be guaranteed, so no family is derived"));
    break;
  case FamilyCase::OneCone:
    f.expr = G::dih(G::product(zm(), zn()));
    f.atlas_row = 11;
    f.citations.push_back("single-critical-fiber");
    f.citations.push_back("s2-action-row-11");
    break;
  case FamilyCase::TwoDistinctCones:
    f.expr = G::dih(G::product(zm(), zn()));
    f.atlas_row = 11;
    f.citations.push_back("two-distinct-critical-fibers");
    f.citations.push_back("s2-action-row-11");
    break;
  case FamilyCase::TwoEqualCones:
    if (is_even(m.b))
      f.caveats.push_back(
          "equal critical fibers with b even: the rule for this case bounds G by "
          "(Z_m x Dih(Z_n)) o- Z_2, and the accompanying remark calls these manifolds S2 x S1, "
          "which contradicts their nonzero Euler class (for example (0,o1|(3,1),(3,1),(1,0)) has "
          "e = -2/3 and chi_orb = 2/3); no family is returned");
    else
      f.caveats.push_back(lens_reference_caveat("equal critical fibers with b odd"));
    f.alternate = G::anti_semidirect_z2(G::product(zm(), G::dih(zn())));
    f.citations.push_back("two-equal-critical-fibers");
    break;
  case FamilyCase::DihedralAllEqual:
    f.expr = G::anti_semidirect_z2(G::product(zm(), G::dih(z(3))));
    f.atlas_row = 13;
    f.atlas_n = Integer(1);
    f.citations.push_back("three-equal-critical-fibers");
    f.citations.push_back("s2-action-row-13");
    break;
  case FamilyCase::DihedralTwoEqual:
    f.expr = G::dih(G::product(zm(), z(2)));
    f.atlas_row = 11;
    f.atlas_n = Integer(2);
    f.citations.push_back("two-equal-of-three-critical-fibers");
    f.citations.push_back("s2-action-row-11");
    break;
  case FamilyCase::ProjectiveCone:
    f.expr = G::product(z(2), G::dih(zn()));
    f.obstruction_b = 2 * m.b;
    f.atlas_row = 3; // rows 3 and 4 differ in the parity of n; row 3 has the stricter rule
    f.caveats.push_back("obtained through the orientable double cover (0,o1|(q,p),(q,p),(1,2b)), "
                        "whose obstruction class 2b is always even");
    f.citations.push_back("projective-base-double-cover");
    f.citations.push_back("s2-action-rows-3-4");
    break;
  case FamilyCase::TetrahedralEqual:
    f.expr = G::dih(G::product(zm(), z(2)));
    f.alternate = G::anti_semidirect_z2(G::product(zm(), G::dih(z(3))));
    f.atlas_row = 11;
    f.atlas_n = Integer(2);
    f.caveats.push_back("the prose for this base names the rule for two equal fibers among three "
                        "but states the three-equal conclusion (Z_m x Dih(Z_3)) o- Z_2; the "
                        "rule's own conclusion Dih(Z_m x Z_2) is returned");
    f.citations.push_back("two-equal-of-three-critical-fibers");
    f.citations.push_back("s2-action-row-11");
    break;
  case FamilyCase::TetrahedralDistinct:
    f.expr = G::dih(zm());
    f.atlas_row = 1;
    f.citations.push_back("three-distinct-critical-fibers");
    f.citations.push_back("s2-action-row-1");
    break;
  case FamilyCase::OctahedralOrIcosahedral:
    f.expr = G::dih(zm());
    f.alternate = G::anti_semidirect_z2(G::product(zm(), G::dih(z(3))));
    f.atlas_row = 1;
    f.caveats.push_back("the prose for these bases names the three-equal-fibers rule but states "
                        "the three-distinct conclusion Dih(Z_m); the pairs are necessarily "
                        "distinct, so Dih(Z_m) is returned");
    f.citations.push_back("three-distinct-critical-fibers");
    f.citations.push_back("s2-action-row-1");
    break;
  case FamilyCase::ProjectivePlaneNoCone:
    f.caveats.push_back("P2 without critical fibers has positive orbifold Euler characteristic "
                        "but is not among the listed elliptic bases; no family is derived");
    break;
  }
  return f;
}

} // namespace seifert
