#pragma once

// Which finite fiber-preserving group actions an elliptic Seifert manifold can
// carry: the orientation-reversal exclusions and the case split over base
// orbifolds.  Families are upper bounds ("G is a subgroup of ...").

#include "seifert/atlas.hpp"
#include "seifert/invariants.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seifert {

class NotElliptic : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

enum class ReversalReason { CriticalFiberOrderGT2, NonzeroEulerClass };

char const *to_string(ReversalReason r);

struct ReversalVerdict {
  bool excluded = false;
  std::vector<ReversalReason> reasons;
  std::string note;
  std::vector<std::string> citations;
};

/// Orientable bases only; throws OutOfScopeGeometry for an n2 base.
/// excluded == false means the rules do not rule reversal out, not that it exists.
ReversalVerdict reversal_excluded(SeifertInvariants const &m);

/// Dispatch cases over elliptic invariants, in the order they are tried.
enum class FamilyCase {
  SphereEvenB,
  SphereOddB,
  OneCone,
  TwoDistinctCones,
  TwoEqualCones,
  DihedralAllEqual,   // S2(2,2,2)
  DihedralTwoEqual,   // S2(2,2,q), q >= 3
  ProjectiveCone,
  TetrahedralEqual,   // S2(2,3,3) with equal (3,p) pairs
  TetrahedralDistinct,
  OctahedralOrIcosahedral,
  ProjectivePlaneNoCone,
};

char const *to_string(FamilyCase c);

struct GroupFamily {
  FamilyCase dispatch_case = FamilyCase::OneCone;
  std::optional<GroupExpr> expr; // empty for deferred cases
  std::string source;            // rule id the family comes from
  std::vector<std::string> caveats;
  std::optional<GroupExpr> alternate; // the other reading when the sources disagree
  /// Action on S^2 the case relies on, when the rule uses one row of the action table.
  std::optional<int> atlas_row;
  std::optional<Integer> atlas_n;
  Integer obstruction_b; // b, or 2b for the orientable double cover of a P2 base
  std::vector<std::string> citations;

  bool deferred() const { return !expr.has_value(); }
};

/// Every case whose hypothesis the (normalized) invariants satisfy; exactly one
/// for elliptic input.
std::vector<FamilyCase> matching_cases(SeifertInvariants const &m);

/// Throws NotElliptic when the verdict is not elliptic; deferred cases return a
/// family with no expression and an explanatory caveat.
GroupFamily admissible_family(SeifertInvariants const &m);

} // namespace seifert
