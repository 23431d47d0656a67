#pragma once

// The finite group actions on S^2 (orientation-preserving ones on S^2, the
// reflection groups with quotient a disc, and the two with quotient P^2),
// with the orbit numbers of their non-regular points and the obstruction
// condition each one satisfies.  Rows are stored exactly as tabulated; the
// auditor below recomputes what it can from first principles and reports
// disagreements instead of correcting them.

#include "seifert/invariants.hpp"
#include "seifert/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seifert {

/// coeff * symbol + constant, or a plain integer when symbol == '\0'.
struct Param {
  Integer coeff = 0;
  Integer constant = 0;
  char symbol = '\0';

  static Param value(Integer v) { return {0, std::move(v), '\0'}; }
  static Param linear(char symbol, Integer coeff, Integer constant = 0) {
    return {std::move(coeff), std::move(constant), symbol};
  }

  bool concrete() const { return symbol == '\0'; }
  Integer evaluate() const; // throws std::logic_error while symbolic
  Param instantiate(char sym, Integer const &v) const;
  std::string to_string() const;

  friend bool operator==(Param const &, Param const &) = default;
};

/// Symbolic group expressions used by the action table and by the
/// classification families.  "H o- Z_2" is the semidirect product in which
/// the Z_2 generator inverts every element of H; Dih(H) is the same
/// construction written for abelian H.
class GroupExpr {
public:
  enum class Kind {
    Trivial,
    Cyclic,
    Dihedral,
    Product,
    AntiSemidirectZ2,
    A4,
    S4,
    A5,
    RotationGroupOfS2, // any orientation-preserving finite group acting on S^2
  };

  static GroupExpr trivial() { return GroupExpr(Kind::Trivial); }
  static GroupExpr cyclic(Param order);
  static GroupExpr cyclic(Integer order) { return cyclic(Param::value(std::move(order))); }
  static GroupExpr dih(GroupExpr inner);
  static GroupExpr product(GroupExpr lhs, GroupExpr rhs);
  static GroupExpr anti_semidirect_z2(GroupExpr inner);
  static GroupExpr a4() { return GroupExpr(Kind::A4); }
  static GroupExpr s4() { return GroupExpr(Kind::S4); }
  static GroupExpr a5() { return GroupExpr(Kind::A5); }
  static GroupExpr rotation_group_of_s2() { return GroupExpr(Kind::RotationGroupOfS2); }

  Kind kind() const { return kind_; }
  std::vector<GroupExpr> const &children() const { return children_; }
  Param const &param() const { return param_; }

  /// Group order, or nullopt while any parameter is symbolic.
  std::optional<Integer> order() const;
  bool concrete() const;
  std::vector<char> free_symbols() const;
  GroupExpr instantiate(char symbol, Integer const &value) const;
  std::string to_string() const;

  friend bool operator==(GroupExpr const &, GroupExpr const &) = default;

private:
  explicit GroupExpr(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Trivial;
  Param param_;
  std::vector<GroupExpr> children_;
};

enum class OcRule { AllB, BEven };

char const *to_string(OcRule rule);

struct BranchData {
  std::vector<Param> cones;   // before ';'
  std::vector<Param> corners; // after ';' (disc quotients only)
  bool mirror = false;
  std::string to_string() const;
};

struct S2ActionRow {
  int number = 0;
  Underlying underlying = Underlying::Sphere;
  GroupExpr group = GroupExpr::trivial();
  BranchData branch_data;
  std::vector<std::string> generators;
  std::vector<Param> orbit_numbers; // empty for the free action on P^2
  Param lcm;
  int index_over_lcm = 1;
  OcRule oc_rule = OcRule::AllB;

  bool concrete() const;
  S2ActionRow instantiate(Integer const &n) const;
};

constexpr int kAtlasRowCount = 21;

/// All rows in table order; parameterized rows are instantiated when n is given (n >= 1).
std::vector<S2ActionRow> atlas_rows(std::optional<Integer> const &n = std::nullopt);
S2ActionRow atlas_row(int number, std::optional<Integer> const &n = std::nullopt);

/// Recomputation of the LCM and |G|/LCM columns of one concrete row.
struct LcmAudit {
  int number = 0;
  Integer group_order;
  Integer table_lcm;
  Integer table_index;
  Integer recomputed_lcm;     // lcm of the tabulated orbit numbers
  Rational recomputed_index;  // |G| / recomputed_lcm
  Integer orbit_gcd;          // gcd of the orbit numbers and |G|

  bool order_matches() const { return group_order == table_lcm * table_index; }
  bool lcm_matches() const { return recomputed_lcm == table_lcm; }
  /// b is a sum of multiples of orbit sizes exactly when orbit_gcd divides b.
  bool gcd_rule_matches() const { return orbit_gcd == table_index; }
  bool rule_matches_index() const;
  bool consistent() const { return order_matches() && lcm_matches(); }

  OcRule tabulated_rule = OcRule::AllB;
  std::vector<std::string> notes;
};

/// Throws std::invalid_argument when the row still has a symbolic parameter.
LcmAudit recompute_lcm_index(S2ActionRow const &row);

/// As recompute_lcm_index, but throws std::runtime_error on any mismatch.
LcmAudit require_consistent(S2ActionRow const &row);

/// True iff index_over_lcm divides b.
bool obstruction_satisfied(S2ActionRow const &row, Integer const &b);

} // namespace seifert
