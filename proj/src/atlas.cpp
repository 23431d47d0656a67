#include "seifert/atlas.hpp"

#include <algorithm>
#include <stdexcept>

namespace seifert {

// ---------------------------------------------------------------- Param

Integer Param::evaluate() const {
  if (!concrete())
    throw std::logic_error(std::string("parameter still depends on ") + symbol);
  return constant;
}

Param Param::instantiate(char sym, Integer const &v) const {
  if (symbol != sym)
    return *this;
  return value(coeff * v + constant);
}

std::string Param::to_string() const {
  if (concrete())
    return seifert::to_string(constant);
  std::string s;
  if (coeff == -1)
    s = "-";
  else if (coeff != 1)
    s = seifert::to_string(coeff);
  s += symbol;
  if (constant > 0)
    s += "+" + seifert::to_string(constant);
  else if (constant < 0)
    s += seifert::to_string(constant);
  return s;
}

// ---------------------------------------------------------------- GroupExpr

GroupExpr GroupExpr::cyclic(Param order) {
  GroupExpr g(Kind::Cyclic);
  g.param_ = std::move(order);
  return g;
}

GroupExpr GroupExpr::dih(GroupExpr inner) {
  GroupExpr g(Kind::Dihedral);
  g.children_.push_back(std::move(inner));
  return g;
}

GroupExpr GroupExpr::product(GroupExpr lhs, GroupExpr rhs) {
  GroupExpr g(Kind::Product);
  g.children_.push_back(std::move(lhs));
  g.children_.push_back(std::move(rhs));
  return g;
}

GroupExpr GroupExpr::anti_semidirect_z2(GroupExpr inner) {
  GroupExpr g(Kind::AntiSemidirectZ2);
  g.children_.push_back(std::move(inner));
  return g;
}

std::optional<Integer> GroupExpr::order() const {
  switch (kind_) {
  case Kind::Trivial: return Integer(1);
  case Kind::Cyclic:
    if (!param_.concrete())
      return std::nullopt;
    return param_.evaluate();
  case Kind::Dihedral:
  case Kind::AntiSemidirectZ2: {
    auto inner = children_[0].order();
    if (!inner)
      return std::nullopt;
    return Integer(2 * *inner);
  }
  case Kind::Product: {
    auto l = children_[0].order();
    auto r = children_[1].order();
    if (!l || !r)
      return std::nullopt;
    return Integer(*l * *r);
  }
  case Kind::A4: return Integer(12);
  case Kind::S4: return Integer(24);
  case Kind::A5: return Integer(60);
  case Kind::RotationGroupOfS2: return std::nullopt;
  }
  return std::nullopt;
}

bool GroupExpr::concrete() const { return free_symbols().empty() && kind_ != Kind::RotationGroupOfS2; }

std::vector<char> GroupExpr::free_symbols() const {
  std::vector<char> out;
  if (kind_ == Kind::Cyclic && !param_.concrete())
    out.push_back(param_.symbol);
  for (auto const &c : children_)
    for (char s : c.free_symbols())
      out.push_back(s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GroupExpr GroupExpr::instantiate(char symbol, Integer const &value) const {
  GroupExpr g = *this;
  g.param_ = param_.instantiate(symbol, value);
  for (auto &c : g.children_)
    c = c.instantiate(symbol, value);
  return g;
}

namespace {

bool compound(GroupExpr const &g) {
  return g.kind() == GroupExpr::Kind::Product || g.kind() == GroupExpr::Kind::AntiSemidirectZ2;
}

std::string wrapped(GroupExpr const &g) {
  return compound(g) ? "(" + g.to_string() + ")" : g.to_string();
}

} // namespace

std::string GroupExpr::to_string() const {
  switch (kind_) {
  case Kind::Trivial: return "1";
  case Kind::Cyclic: {
    auto p = param_.to_string();
    if (p.size() == 1 || param_.concrete())
      return "Z_" + p;
    return "Z_{" + p + "}";
  }
  case Kind::Dihedral: return "Dih(" + children_[0].to_string() + ")";
  case Kind::Product: return wrapped(children_[0]) + " x " + wrapped(children_[1]);
  case Kind::AntiSemidirectZ2: return wrapped(children_[0]) + " o- Z_2";
  case Kind::A4: return "A4";
  case Kind::S4: return "S4";
  case Kind::A5: return "A5";
  case Kind::RotationGroupOfS2: return "H";
  }
  return "?";
}

// ---------------------------------------------------------------- rows

char const *to_string(OcRule rule) { return rule == OcRule::AllB ? "all b" : "b even"; }

std::string BranchData::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < cones.size(); ++i)
    s += (i ? "," : "") + cones[i].to_string();
  if (mirror) {
    s += ";";
    for (std::size_t i = 0; i < corners.size(); ++i)
      s += (i ? "," : "") + corners[i].to_string();
  }
  return s + ")";
}

bool S2ActionRow::concrete() const {
  if (!group.concrete() || !lcm.concrete())
    return false;
  auto all_concrete = [](std::vector<Param> const &v) {
    return std::all_of(v.begin(), v.end(), [](Param const &p) { return p.concrete(); });
  };
  return all_concrete(orbit_numbers) && all_concrete(branch_data.cones) &&
         all_concrete(branch_data.corners);
}

S2ActionRow S2ActionRow::instantiate(Integer const &n) const {
  if (n < 1)
    throw std::invalid_argument("table parameter n must be >= 1");
  S2ActionRow r = *this;
  r.group = group.instantiate('n', n);
  for (auto &p : r.orbit_numbers)
    p = p.instantiate('n', n);
  for (auto &p : r.branch_data.cones)
    p = p.instantiate('n', n);
  for (auto &p : r.branch_data.corners)
    p = p.instantiate('n', n);
  r.lcm = lcm.instantiate('n', n);
  return r;
}

namespace {

Param v(long x) { return Param::value(x); }
Param n_(long coeff, long constant = 0) { return Param::linear('n', coeff, constant); }

using G = GroupExpr;

G zn(long coeff, long constant = 0) { return G::cyclic(n_(coeff, constant)); }
G z(long k) { return G::cyclic(Integer(k)); }

BranchData cones(std::vector<Param> c) { return {std::move(c), {}, false}; }
BranchData mirrored(std::vector<Param> c, std::vector<Param> corners) {
  return {std::move(c), std::move(corners), true};
}

std::vector<S2ActionRow> const &table() {
  using U = Underlying;
  static std::vector<S2ActionRow> const rows = {
      // Orientation-preserving actions, quotient S^2.
      {1, U::Sphere, G::trivial(), cones({}), {"id"}, {v(1)}, v(1), 1, OcRule::AllB},
      {2, U::Sphere, zn(1), cones({n_(1), n_(1)}), {"rot_n^z"}, {v(1), v(1)}, n_(1), 1, OcRule::AllB},
      {3, U::Sphere, G::dih(zn(2)), cones({v(2), v(2), n_(2)}), {"rot_2n^z", "rot_2^y"},
       {v(2), n_(2), n_(2)}, n_(2), 2, OcRule::BEven},
      {4, U::Sphere, G::dih(zn(2, 1)), cones({v(2), v(2), n_(2, 1)}), {"rot_2n+1^z", "rot_2^y"},
       {v(2), n_(2, 1), n_(2, 1)}, n_(4, 2), 1, OcRule::AllB},
      {5, U::Sphere, G::a4(), cones({v(2), v(3), v(3)}), {"rot_2^z", "rot_3^L1"},
       {v(4), v(4), v(6)}, v(6), 2, OcRule::BEven},
      {6, U::Sphere, G::s4(), cones({v(2), v(3), v(4)}), {"rot_2^z", "rot_3^L2"},
       {v(6), v(8), v(12)}, v(12), 2, OcRule::BEven},
      {7, U::Sphere, G::a5(), cones({v(2), v(3), v(5)}), {"rot_2^z", "rot_3^L3"},
       {v(6), v(10), v(15)}, v(30), 1, OcRule::AllB},
      // Actions with a reflection, quotient a disc.
      {8, U::Disc, z(2), mirrored({}, {}), {"ref^xy"}, {v(1)}, v(2), 1, OcRule::AllB},
      {9, U::Disc, G::product(zn(2), z(2)), mirrored({n_(2)}, {}), {"rot_2n^z", "ref^xy"},
       {v(2), n_(1)}, n_(2), 2, OcRule::BEven},
      {10, U::Disc, zn(4, 2), mirrored({n_(2, 1)}, {}), {"rot_2n+1^z o ref^xy"},
       {v(2), n_(2, 1)}, n_(4, 2), 1, OcRule::AllB},
      {11, U::Disc, G::dih(zn(1)), mirrored({}, {n_(1), n_(1)}), {"rot_n^z", "ref^yz"},
       {v(1), v(1)}, n_(2), 1, OcRule::AllB},
      {12, U::Disc, G::anti_semidirect_z2(G::dih(zn(2))), mirrored({}, {v(2), v(2), n_(2)}),
       {"rot_2n^z", "rot_2^y", "ref^yz"}, {v(2), n_(2), n_(2)}, n_(4), 2, OcRule::BEven},
      {13, U::Disc, G::anti_semidirect_z2(G::dih(zn(2, 1))), mirrored({}, {v(2), v(2), n_(2, 1)}),
       {"rot_2n+1^z", "rot_2^y", "ref^yz"}, {v(2), n_(2, 1), n_(2, 1)}, n_(8, 4), 1, OcRule::AllB},
      {14, U::Disc, G::anti_semidirect_z2(G::a4()), mirrored({}, {v(2), v(3), v(3)}),
       {"rot_2^z", "rot_3^L1", "ref^yz"}, {v(4), v(4), v(6)}, v(12), 2, OcRule::BEven},
      {15, U::Disc, G::product(G::s4(), z(2)), mirrored({}, {v(2), v(3), v(4)}),
       {"rot_2^z", "rot_3^L2", "ref^xy"}, {v(6), v(8), v(12)}, v(24), 2, OcRule::BEven},
      {16, U::Disc, G::product(G::a5(), z(2)), mirrored({}, {v(2), v(3), v(5)}),
       {"rot_2^z", "rot_3^L3", "ref^xy"}, {v(6), v(10), v(15)}, v(60), 2, OcRule::BEven},
      {17, U::Disc, G::anti_semidirect_z2(G::dih(zn(2))), mirrored({v(2)}, {n_(2)}),
       {"rot_2n^z", "rot_2^y", "ref^xz"}, {v(2), n_(4)}, n_(4), 2, OcRule::BEven},
      {18, U::Disc, G::anti_semidirect_z2(G::dih(zn(2, 1))), mirrored({v(2)}, {n_(2, 1)}),
       {"rot_2n+1^z", "rot_2^y", "ref^xz"}, {v(2), n_(4, 2)}, n_(4, 2), 2, OcRule::BEven},
      {19, U::Disc, G::product(G::a4(), z(2)), mirrored({v(3)}, {v(2)}),
       {"rot_2^z", "rot_3^L1", "ref^xy"}, {v(6), v(8)}, v(12), 2, OcRule::BEven},
      // Quotient P^2.
      {20, U::ProjectivePlane, z(2), cones({}), {"rot_2^z o ref^xy"}, {}, v(1), 2, OcRule::BEven},
      {21, U::ProjectivePlane, zn(2), cones({n_(1)}), {"rot_2n^z o ref^xy"}, {v(2)}, n_(1), 2,
       OcRule::BEven},
  };
  return rows;
}

} // namespace

std::vector<S2ActionRow> atlas_rows(std::optional<Integer> const &n) {
  if (!n)
    return table();
  std::vector<S2ActionRow> out;
  out.reserve(table().size());
  for (auto const &row : table())
    out.push_back(row.instantiate(*n));
  return out;
}

S2ActionRow atlas_row(int number, std::optional<Integer> const &n) {
  if (number < 1 || number > kAtlasRowCount)
    throw std::out_of_range("action table has rows 1.." + std::to_string(kAtlasRowCount));
  auto const &row = table()[static_cast<std::size_t>(number - 1)];
  return n ? row.instantiate(*n) : row;
}

bool LcmAudit::rule_matches_index() const {
  return (tabulated_rule == OcRule::AllB) == (table_index == 1);
}

LcmAudit recompute_lcm_index(S2ActionRow const &row) {
  if (!row.concrete())
    throw std::invalid_argument("row " + std::to_string(row.number) +
                                " has a symbolic parameter; instantiate it first");
  LcmAudit a;
  a.number = row.number;
  a.group_order = *row.group.order();
  a.table_lcm = row.lcm.evaluate();
  a.table_index = row.index_over_lcm;
  a.tabulated_rule = row.oc_rule;

  a.recomputed_lcm = 1;
  a.orbit_gcd = a.group_order;
  for (auto const &p : row.orbit_numbers) {
    Integer k = p.evaluate();
    a.recomputed_lcm = lcm(a.recomputed_lcm, k);
    a.orbit_gcd = gcd(a.orbit_gcd, k);
  }
  a.recomputed_index = make_rational(a.group_order, a.recomputed_lcm);

  auto s = [](Integer const &x) { return to_string(x); };
  if (!a.order_matches())
    a.notes.push_back("|G| = " + s(a.group_order) + " but tabulated LCM * index = " +
                      s(a.table_lcm) + " * " + s(a.table_index));
  if (!a.lcm_matches())
    a.notes.push_back("lcm of orbit numbers is " + s(a.recomputed_lcm) + " (|G|/lcm = " +
                      to_string(a.recomputed_index) + ") but the table lists LCM " +
                      s(a.table_lcm) + " (|G|/LCM = " + s(a.table_index) + ")");
  if (!a.gcd_rule_matches())
    a.notes.push_back("gcd of orbit sizes is " + s(a.orbit_gcd) +
                      ", which predicts '" + (a.orbit_gcd == 1 ? "all b" : "b even") +
                      "' against the tabulated '" + to_string(a.tabulated_rule) + "'");
  if (!a.rule_matches_index())
    a.notes.push_back("obstruction rule disagrees with the tabulated |G|/LCM");
  return a;
}

LcmAudit require_consistent(S2ActionRow const &row) {
  auto a = recompute_lcm_index(row);
  if (!a.consistent()) {
    std::string msg = "row " + std::to_string(row.number) + ":";
    for (auto const &n : a.notes)
      msg += " " + n + ";";
    throw std::runtime_error(msg);
  }
  return a;
}

bool obstruction_satisfied(S2ActionRow const &row, Integer const &b) {
  return mod_floor(b, Integer(row.index_over_lcm)) == 0;
}

} // namespace seifert
