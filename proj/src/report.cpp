#include "seifert/report.hpp"

#include <sstream>

namespace seifert {

Json to_json(Integer const &x) {
  if (auto v = to_int64(x))
    return *v;
  return to_string(x);
}

Json to_json(Rational const &x) { return to_string(x); }

Json to_json(Mat2 const &m) {
  return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Json to_json(RationalMat2 const &m) {
  return Json::array({Json::array({to_json(m(0, 0)), to_json(m(0, 1))}),
                      Json::array({to_json(m(1, 0)), to_json(m(1, 1))})});
}

Json to_json(RotationPair const &r) { return Json::array({to_json(r.alpha), to_json(r.beta)}); }

namespace {

Json rotations(std::vector<RotationPair> const &v) {
  Json out = Json::array();
  for (auto const &r : v)
    out.push_back(to_json(r));
  return out;
}

Json param_json(Param const &p) {
  if (p.concrete())
    return to_json(p.constant);
  return p.to_string();
}

} // namespace

Json to_json(SeifertInvariants const &m) {
  Json pairs = Json::array();
  for (auto const &[q, p] : m.pairs)
    pairs.push_back(Json::array({to_json(q), to_json(p)}));
  Json j;
  j["text"] = format_invariants(m);
  j["genus"] = to_json(m.genus);
  j["base_orientation"] = to_string(m.orientation);
  j["pairs"] = pairs;
  j["b"] = to_json(m.b);
  return j;
}

Json to_json(GeometryVerdict const &v) {
  Json j;
  j["base_label"] = v.base_label;
  j["chi_orb"] = to_json(v.chi_orb);
  j["euler_class"] = to_json(v.euler_class);
  j["elliptic"] = v.elliptic;
  j["in_scope"] = v.in_scope;
  j["elliptic_shape"] = v.shape ? Json(to_string(*v.shape)) : Json(nullptr);
  return j;
}

Json to_json(ReversalVerdict const &v) {
  Json reasons = Json::array();
  for (auto r : v.reasons)
    reasons.push_back(to_string(r));
  Json j;
  j["excluded"] = v.excluded;
  j["reasons"] = reasons;
  j["note"] = v.note;
  return j;
}

Json to_json(GroupFamily const &f) {
  Json j;
  j["case"] = to_string(f.dispatch_case);
  j["family"] = f.expr ? Json(f.expr->to_string()) : Json(nullptr);
  j["deferred"] = f.deferred();
  j["alternate_reading"] = f.alternate ? Json(f.alternate->to_string()) : Json(nullptr);
  j["source"] = f.source;
  j["caveats"] = f.caveats;
  if (f.atlas_row) {
    Json row;
    row["row"] = *f.atlas_row;
    row["n"] = f.atlas_n ? to_json(*f.atlas_n) : Json(nullptr);
    row["obstruction_b"] = to_json(f.obstruction_b);
    row["obstruction_satisfied"] = obstruction_satisfied(
        atlas_row(*f.atlas_row, f.atlas_n ? f.atlas_n : std::optional<Integer>(Integer(1))),
        f.obstruction_b);
    j["s2_action"] = row;
  }
  return j;
}

Json to_json(S2ActionRow const &row) {
  Json orbit = Json::array();
  for (auto const &p : row.orbit_numbers)
    orbit.push_back(param_json(p));
  Json j;
  j["number"] = row.number;
  j["quotient"] = to_string(row.underlying);
  j["group"] = row.group.to_string();
  auto order = row.group.order();
  j["order"] = order ? to_json(*order) : Json(nullptr);
  j["branch_data"] = row.branch_data.to_string();
  j["generators"] = row.generators;
  j["orbit_numbers"] = orbit;
  j["lcm"] = param_json(row.lcm);
  j["index_over_lcm"] = row.index_over_lcm;
  j["oc_rule"] = to_string(row.oc_rule);
  return j;
}

Json to_json(LcmAudit const &a) {
  Json j;
  j["number"] = a.number;
  j["group_order"] = to_json(a.group_order);
  j["table_lcm"] = to_json(a.table_lcm);
  j["table_index"] = to_json(a.table_index);
  j["recomputed_lcm"] = to_json(a.recomputed_lcm);
  j["recomputed_index"] = to_json(a.recomputed_index);
  j["orbit_gcd"] = to_json(a.orbit_gcd);
  j["order_matches"] = a.order_matches();
  j["lcm_matches"] = a.lcm_matches();
  j["gcd_rule_matches"] = a.gcd_rule_matches();
  j["rule_matches_index"] = a.rule_matches_index();
  j["notes"] = a.notes;
  return j;
}

Json to_json(SweepReport const &r) {
  Json list = Json::array();
  for (auto const &d : r.discrepancies) {
    Json e;
    e["generators"] = rotations(d.generators);
    e["formula"] = to_json(d.formula);
    e["oracle"] = to_json(d.oracle);
    list.push_back(e);
  }
  Json j;
  j["formula"] = to_string(r.formula);
  j["max_denominator"] = r.max_denominator;
  j["exhaustive_cases"] = r.exhaustive_cases;
  j["random_cases"] = r.random_cases;
  j["random_max_denominator"] = r.random_max_denominator;
  j["seed"] = r.seed;
  j["discrepancy_count"] = r.discrepancies.size();
  j["discrepancies"] = list;
  return j;
}

Json to_json(QuotientDescriptor const &q) {
  Json classes = Json::array();
  for (auto const &c : q.classes) {
    Json e;
    e["boundaries"] = c.members;
    e["orientation"] = c.orientation;
    e["filling"] = to_json(c.filling);
    e["torus_generators"] = rotations(c.torus_spec.generators);
    e["filling_generators"] = rotations(c.projected.boundary_generators);
    e["fiber_reversing_stabilizer"] = c.torus_spec.fiber_reversing;
    e["torus_projection"] = to_json(c.projected.torus_projection);
    e["boundary_projection"] = to_json(c.projected.boundary_projection);
    e["l"] = to_json(c.projected.l);
    e["l_forced"] = c.l_forced;
    e["z"] = to_json(c.projected.z);
    e["projected_filling"] = to_json(c.projected.piece.slope);
    auto slope = slope_of(c.projected.piece.slope);
    e["slope"] = {{"p", to_json(slope.p)}, {"q", to_json(slope.q)}};
    e["core_order"] = to_json(c.oracle_k);
    e["core_order_formula"] = to_json(c.formula_k);
    e["core_order_published"] = c.expected_k ? to_json(*c.expected_k) : Json(nullptr);
    e["swapped_with"] = c.swapped_with >= 0 ? Json(c.swapped_with) : Json(nullptr);
    classes.push_back(e);
  }
  Json pieces = Json::array();
  for (auto const &p : q.pieces) {
    Json e;
    e["boundary_class"] = p.boundary_class;
    e["kind"] = to_string(p.piece.kind);
    e["k"] = to_json(p.piece.k);
    e["label"] = std::string(to_string(p.piece.kind)) + "(" + to_string(p.piece.k) + ")";
    e["slope_matrix"] = to_json(p.piece.slope);
    pieces.push_back(e);
  }
  Json l = Json::array();
  for (auto const &x : q.l_assignments)
    l.push_back(to_json(x));
  Json j;
  j["base_kind"] = to_string(q.base_kind);
  j["arc_data"] = {{"arcs", q.arc_data.arcs},
                   {"circles", q.arc_data.circles},
                   {"description", q.arc_data.description}};
  j["removed_balls"] = q.removed_balls;
  j["removed_solid_tori"] = q.removed_solid_tori;
  j["pieces"] = pieces;
  j["l_assignments"] = l;
  j["constraint_sum"] = to_json(q.constraint_sum);
  j["classes"] = classes;
  return j;
}

Json to_json(LensSpace const &l) {
  Json j;
  j["p"] = to_json(l.p);
  j["q"] = to_json(l.q);
  j["gluing"] = to_json(l.gluing);
  return j;
}

// ---------------------------------------------------------------- readers

Integer integer_from_json(Json const &j) {
  if (j.is_number_integer())
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string())
    return parse_integer(j.get<std::string>());
  throw InvalidAction("expected an integer, got " + j.dump());
}

Mat2 mat2_from_json(Json const &j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2)
    throw InvalidAction("expected a matrix [[a,b],[c,d]], got " + j.dump());
  return Mat2(integer_from_json(j[0][0]), integer_from_json(j[0][1]), integer_from_json(j[1][0]),
              integer_from_json(j[1][1]));
}

namespace {

Rational rational_from_json(Json const &j) {
  if (j.is_number_integer())
    return Rational(Integer(static_cast<long>(j.get<std::int64_t>())));
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  throw InvalidAction("expected a rational, got " + j.dump());
}

std::vector<RotationPair> rotations_from_json(Json const &j) {
  if (!j.is_array())
    throw InvalidAction("expected a list of rotation pairs, got " + j.dump());
  std::vector<RotationPair> out;
  for (auto const &e : j)
    out.push_back(rotation_from_json(e));
  return out;
}

std::vector<std::optional<Integer>> optional_integers(Json const &j) {
  if (!j.is_array())
    throw InvalidAction("expected a list of integers or nulls, got " + j.dump());
  std::vector<std::optional<Integer>> out;
  for (auto const &e : j)
    out.push_back(e.is_null() ? std::nullopt : std::optional<Integer>(integer_from_json(e)));
  return out;
}

void reject_unknown(Json const &j, std::initializer_list<char const *> keys, std::string const &where) {
  for (auto const &[k, v] : j.items()) {
    bool known = false;
    for (auto key : keys)
      known = known || k == key;
    if (!known)
      throw InvalidAction("unknown key '" + k + "' in " + where);
  }
}

} // namespace

RotationPair rotation_from_json(Json const &j) {
  if (j.is_string())
    return parse_rotation(j.get<std::string>());
  if (j.is_array() && j.size() == 2)
    return {rational_from_json(j[0]), rational_from_json(j[1])};
  throw InvalidAction("expected a rotation pair, got " + j.dump());
}

QuotientInput quotient_input_from_json(Json const &j) {
  if (!j.is_object())
    throw InvalidAction("quotient input must be a JSON object");
  reject_unknown(j,
                 {"invariants", "generators", "fiber_reversing", "involution", "boundaries", "fillings",
                  "orbits", "drilled_fibers", "overrides", "expected", "name", "note"},
                 "quotient input");
  if (!j.contains("invariants") || !j["invariants"].is_string())
    throw InvalidAction("quotient input needs an 'invariants' string");
  QuotientInput in;
  in.invariants = parse_invariants(j["invariants"].get<std::string>());
  auto &a = in.action;
  if (j.contains("generators"))
    a.generators = rotations_from_json(j["generators"]);
  if (j.contains("fiber_reversing"))
    a.fiber_reversing = j["fiber_reversing"].get<bool>();
  if (j.contains("involution")) {
    auto const &inv = j["involution"];
    reject_unknown(inv, {"map", "boundary_permutation"}, "involution");
    InvolutionDescriptor d;
    d.map = parse_surface_map(inv.value("map", std::string("reflection")));
    if (inv.contains("boundary_permutation"))
      d.boundary_permutation = inv["boundary_permutation"].get<std::vector<int>>();
    a.involution = d;
  }
  if (j.contains("drilled_fibers"))
    a.drilled_fibers = j["drilled_fibers"].get<int>();
  if (j.contains("boundaries") && j.contains("fillings"))
    throw InvalidAction("give either 'boundaries' or 'fillings', not both");
  if (j.contains("fillings")) {
    for (auto const &f : j["fillings"])
      a.boundaries.push_back({mat2_from_json(f), a.boundaries.empty() ? 1 : -1, std::nullopt,
                              std::nullopt});
  }
  if (j.contains("boundaries")) {
    for (auto const &b : j["boundaries"]) {
      reject_unknown(b, {"filling", "orientation", "stabilizer", "filled_generators"}, "boundary");
      BoundarySpec s;
      if (!b.contains("filling"))
        throw InvalidAction("every boundary needs a 'filling' matrix");
      s.filling = mat2_from_json(b["filling"]);
      s.orientation = b.value("orientation", a.boundaries.empty() ? 1 : -1);
      if (b.contains("stabilizer"))
        s.stabilizer = rotations_from_json(b["stabilizer"]);
      if (b.contains("filled_generators"))
        s.filled_generators = rotations_from_json(b["filled_generators"]);
      a.boundaries.push_back(std::move(s));
    }
  }
  if (j.contains("orbits"))
    a.orbits = j["orbits"].get<std::vector<std::vector<int>>>();
  if (j.contains("overrides")) {
    auto const &o = j["overrides"];
    reject_unknown(o, {"l", "z"}, "overrides");
    if (o.contains("l"))
      a.l_overrides = optional_integers(o["l"]);
    if (o.contains("z"))
      a.z_overrides = optional_integers(o["z"]);
  }
  if (j.contains("expected")) {
    auto const &e = j["expected"];
    reject_unknown(e, {"k"}, "expected");
    if (e.contains("k"))
      a.expected_k = optional_integers(e["k"]);
  }
  return in;
}

namespace {

std::string rotation_list(std::vector<RotationPair> const &gens) {
  if (gens.empty())
    return "identity";
  std::string s;
  for (auto const &g : gens)
    s += (s.empty() ? "" : " ") + to_string(g);
  return s;
}

} // namespace

std::string quotient_text(QuotientInput const &in, QuotientDescriptor const &q) {
  std::ostringstream out;
  out << "manifold      " << format_invariants(normalize(in.invariants)) << "\n";
  out << "rotations    ";
  if (in.action.generators.empty())
    out << " (none)";
  for (auto const &g : in.action.generators)
    out << " " << to_string(g);
  out << (in.action.fiber_reversing ? "  plus fiber reversal" : "") << "\n";
  out << "base piece    " << to_string(q.base_kind) << "; " << q.arc_data.description << "\n";
  if (q.base_kind == BaseKind::FoldedBall)
    out << "              ball less " << q.removed_balls << " ball(s) and " << q.removed_solid_tori
        << " solid tor" << (q.removed_solid_tori == 1 ? "us" : "i") << "\n";

  for (std::size_t j = 0; j < q.classes.size(); ++j) {
    auto const &c = q.classes[j];
    auto const &pf = c.projected;
    out << "\nboundary class " << j << " (tori";
    for (int i : c.members)
      out << " " << i;
    out << ", orientation " << (c.orientation > 0 ? "+" : "-") << ")\n";
    out << "  filling d                 " << to_string(c.filling) << "\n";
    out << "  action on the torus       " << rotation_list(c.torus_spec.generators);
    out << "\n  action on the filling     " << rotation_list(pf.boundary_generators);
    out << "\n  core order k              " << to_string(c.oracle_k) << " (closed form "
        << to_string(c.formula_k) << ", enumeration " << to_string(c.oracle_k);
    if (c.expected_k)
      out << ", published " << to_string(*c.expected_k);
    out << ")\n";
    out << "  torus projection          " << to_string(pf.torus_projection) << "  (l = "
        << to_string(pf.l) << (c.l_forced ? ", forced by the boundary sum" : "") << ")\n";
    out << "  boundary projection       " << to_string(pf.boundary_projection) << "  (z = "
        << to_string(pf.z) << ")\n";
    Mat2 lhs = compose(pf.torus_projection, Mat2(c.filling(0, 0), c.filling(0, 1), c.filling(1, 0),
                                                 c.filling(1, 1), "dV", "T"));
    auto const &d = pf.piece.slope;
    auto slope = slope_of(d);
    out << "  pT d = D' pV              " << to_string(lhs) << "\n";
    out << "  projected filling D'      " << to_string(d) << "  so p' = " << to_string(slope.p)
        << ", q' = " << to_string(slope.q) << ", x' = " << to_string(d(0, 0))
        << ", y' = " << to_string(d(1, 0)) << "\n";
  }

  out << "\npieces       ";
  for (auto const &p : q.pieces)
    out << " " << to_string(p.piece.kind) << "(" << to_string(p.piece.k) << ") on class "
        << p.boundary_class << ";";
  out << "\nboundary sum  sum sign * l * #orbit = " << to_string(q.constraint_sum) << "\n";
  for (auto const &w : q.warnings)
    out << "warning: " << w << "\n";
  return out.str();
}

} // namespace seifert
