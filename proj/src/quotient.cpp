#include "seifert/quotient.hpp"

#include "seifert/oracle.hpp"

#include <algorithm>

namespace seifert {

char const *to_string(PieceKind kind) { return kind == PieceKind::SolidTorusVk ? "V" : "B"; }

std::vector<RotationPair> induced_action_on_filling(std::vector<RotationPair> const &ambient,
                                                    Mat2 const &d) {
  std::vector<RotationPair> out;
  out.reserve(ambient.size());
  for (auto const &g : ambient)
    out.push_back(transform_inverse(d, g));
  return out;
}

Integer core_order_cyclic(RotationPair const &g) {
  Integer const &a2 = g.alpha.get_den();
  Integer const &b2 = g.beta.get_den();
  return b2 / gcd(a2, b2);
}

Integer core_order_bicyclic(RotationPair const &g1, RotationPair const &g2) {
  Integer const &a1 = g1.alpha.get_num(), &a2 = g1.alpha.get_den();
  Integer const &b1 = g1.beta.get_num(), &b2 = g1.beta.get_den();
  Integer const &c1 = g2.alpha.get_num(), &c2 = g2.alpha.get_den();
  Integer const &d1 = g2.beta.get_num(), &d2 = g2.beta.get_den();
  Integer z = inverse_residue_of_minus_one(a1, a2);
  Integer g_ac = gcd(a2, c2);
  Integer num = b2 * d2 * g_ac;
  Integer den = gcd(d2 * g_ac * gcd(a2, b2), a2 * b1 * c1 * d2 * z + b2 * c2 * d1);
  return num / den;
}

Integer formula_core_order(TorusActionSpec const &spec) {
  switch (spec.generators.size()) {
  case 0: return 1;
  case 1: return core_order_cyclic(spec.generators[0]);
  case 2: return core_order_bicyclic(spec.generators[0], spec.generators[1]);
  default:
    throw InvalidAction("a torus stabilizer is generated by at most two rotations, got " +
                        std::to_string(spec.generators.size()));
  }
}

QuotientPiece quotient_piece(TorusActionSpec const &spec, Mat2 const &slope) {
  return {spec.fiber_reversing ? PieceKind::ConwayBallBk : PieceKind::SolidTorusVk,
          formula_core_order(spec), slope};
}

namespace {

// The cyclic formulas with the identity rotation cover the trivial group.
RotationPair first_generator(TorusActionSpec const &spec) {
  if (spec.generators.size() > 2)
    throw InvalidAction("a torus stabilizer is generated by at most two rotations, got " +
                        std::to_string(spec.generators.size()));
  return spec.generators.empty() ? RotationPair{} : spec.generators[0];
}

bool bicyclic(TorusActionSpec const &spec) { return spec.generators.size() == 2; }

struct BicyclicData {
  Integer m;       // lcm(a2, b2)
  Integer l_group; // lcm(c2, d2)
  Integer bd;      // lcm(b2, d2)
  Integer ac;      // lcm(a2, c2)
};

BicyclicData bicyclic_data(TorusActionSpec const &spec) {
  auto const &g1 = spec.generators[0];
  auto const &g2 = spec.generators[1];
  return {lcm(g1.alpha.get_den(), g1.beta.get_den()), lcm(g2.alpha.get_den(), g2.beta.get_den()),
          lcm(g1.beta.get_den(), g2.beta.get_den()), lcm(g1.alpha.get_den(), g2.alpha.get_den())};
}

} // namespace

bool torus_l_valid(TorusActionSpec const &spec, Integer const &l) {
  if (bicyclic(spec))
    return l % bicyclic_data(spec).bd == 0;
  auto g = first_generator(spec);
  Integer const &b2 = g.beta.get_den();
  Integer r = lcm(g.alpha.get_den(), b2) / b2;
  return is_integral(g.alpha * r + g.beta * l);
}

Integer default_torus_l(TorusActionSpec const &spec) {
  if (bicyclic(spec))
    return bicyclic_data(spec).bd;
  auto g = first_generator(spec);
  for (Integer l = 0; l < g.beta.get_den(); ++l)
    if (torus_l_valid(spec, l))
      return l;
  throw InvalidAction("no integer l makes the torus projection of " + to_string(g) + " well defined");
}

Mat2 torus_projection_matrix(TorusActionSpec const &spec, std::optional<Integer> const &l_choice) {
  Integer l = l_choice ? *l_choice : default_torus_l(spec);
  if (!torus_l_valid(spec, l))
    throw InvalidAction("l = " + to_string(l) + " is not admissible for this torus projection");
  if (bicyclic(spec)) {
    auto b = bicyclic_data(spec);
    return Mat2(b.m * b.l_group / b.bd, l, 0, b.bd, "T", "T'");
  }
  auto g = first_generator(spec);
  Integer const &b2 = g.beta.get_den();
  return Mat2(lcm(g.alpha.get_den(), b2) / b2, l, 0, b2, "T", "T'");
}

Mat2 boundary_projection_matrix(TorusActionSpec const &spec, std::optional<Integer> const &z_choice) {
  Integer z = z_choice ? *z_choice : Integer(0);
  if (bicyclic(spec)) {
    auto b = bicyclic_data(spec);
    return Mat2(b.ac, 0, z, b.m * b.l_group / b.ac, "dV", "dV'");
  }
  auto g = first_generator(spec);
  Integer const &a2 = g.alpha.get_den();
  return Mat2(a2, 0, z, lcm(a2, g.beta.get_den()) / a2, "dV", "dV'");
}

ProjectedFilling projected_filling(TorusActionSpec const &torus, Mat2 const &d,
                                   FillingOverrides const &overrides) {
  ProjectedFilling out;
  out.boundary_generators = overrides.boundary_generators
                                ? *overrides.boundary_generators
                                : induced_action_on_filling(torus.generators, d);
  if (out.boundary_generators.size() != torus.generators.size())
    throw InvalidAction("the filling action needs as many generators as the torus action");
  TorusActionSpec boundary{out.boundary_generators, torus.fiber_reversing};

  out.torus_projection = torus_projection_matrix(torus, overrides.l);
  out.l = out.torus_projection(0, 1);
  Mat2 filling(d(0, 0), d(0, 1), d(1, 0), d(1, 1), "dV", "T");

  if (overrides.z) {
    out.z = *overrides.z;
    out.boundary_projection = boundary_projection_matrix(boundary, out.z);
  } else {
    Mat2 base = boundary_projection_matrix(boundary, Integer(0));
    Integer span = base.det();
    bool found = false;
    for (Integer z = 0; z < span; ++z) {
      Mat2 candidate = boundary_projection_matrix(boundary, z);
      if (solve_conjugate_rational(out.torus_projection, filling, candidate).integral()) {
        out.z = z;
        out.boundary_projection = candidate;
        found = true;
        break;
      }
    }
    if (!found)
      throw NonIntegralSolution("no z in [0," + to_string(span) +
                                ") gives an integral projected filling; the projection data are inconsistent");
  }
  Mat2 projected = solve_conjugate(out.torus_projection, filling, out.boundary_projection);
  out.piece = quotient_piece(boundary, projected);
  return out;
}

// ---------------------------------------------------------------- assembly

char const *to_string(SurfaceMap map) {
  switch (map) {
  case SurfaceMap::Rotation: return "rotation";
  case SurfaceMap::Reflection: return "reflection";
  case SurfaceMap::Antipodal: return "antipodal";
  }
  return "?";
}

SurfaceMap parse_surface_map(std::string const &name) {
  if (name == "rotation")
    return SurfaceMap::Rotation;
  if (name == "reflection")
    return SurfaceMap::Reflection;
  if (name == "antipodal")
    return SurfaceMap::Antipodal;
  throw InvalidAction("unknown surface map '" + name + "' (rotation, reflection or antipodal)");
}

char const *to_string(BaseKind kind) {
  return kind == BaseKind::FoldedBall ? "folded-ball" : "product-over-quotient-surface";
}

Mat2 default_filling(SeifertPair const &pair) {
  Integer const &q = pair.q;
  Integer const &p = pair.p;
  Integer y = 0;
  if (q > 1) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t()) == 0)
      throw InvalidInvariants("pair (" + to_string(q) + "," + to_string(p) + ") is not coprime");
    y = mod_floor(inv, q) - q;
  }
  Integer x = (p * y - 1) / q;
  return Mat2(x, p, y, q);
}

std::vector<BoundarySpec> default_boundaries(SeifertInvariants const &m, int drilled_fibers) {
  std::vector<BoundarySpec> out;
  for (auto const &pair : m.pairs)
    out.push_back({default_filling(pair), out.empty() ? 1 : -1, std::nullopt, std::nullopt});
  out.push_back({trivial_filling(m.b), out.empty() ? 1 : -1, std::nullopt, std::nullopt});
  for (int i = 0; i < drilled_fibers; ++i)
    out.push_back({trivial_filling(0), -1, std::nullopt, std::nullopt});
  return out;
}

namespace {

std::vector<std::vector<int>> boundary_classes(ActionDescription const &action, int count) {
  if (action.orbits.empty()) {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < count; ++i)
      out.push_back({i});
    return out;
  }
  std::vector<int> seen(static_cast<std::size_t>(count), 0);
  for (auto const &orbit : action.orbits) {
    if (orbit.empty())
      throw InvalidAction("empty boundary orbit");
    for (int i : orbit) {
      if (i < 0 || i >= count)
        throw InvalidAction("boundary index " + std::to_string(i) + " out of range");
      if (seen[static_cast<std::size_t>(i)]++)
        throw InvalidAction("boundary " + std::to_string(i) + " appears in two orbits");
    }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0)
    throw InvalidAction("boundary orbits must cover every boundary torus");
  return action.orbits;
}

template <typename T>
std::optional<T> at_or_none(std::vector<std::optional<T>> const &v, std::size_t i) {
  return i < v.size() ? v[i] : std::nullopt;
}

void apply_involution(QuotientDescriptor &q, InvolutionDescriptor const &inv) {
  int n = static_cast<int>(q.classes.size());
  if (inv.map == SurfaceMap::Rotation)
    throw InvalidAction("a fiber-reversing element must reverse the surface orientation; "
                        "a rotation does not");
  std::vector<int> perm = inv.boundary_permutation;
  if (perm.empty())
    for (int i = 0; i < n; ++i)
      perm.push_back(i);
  if (static_cast<int>(perm.size()) != n)
    throw InvalidAction("boundary permutation has " + std::to_string(perm.size()) +
                        " entries for " + std::to_string(n) + " quotient boundary classes");
  for (int i = 0; i < n; ++i) {
    int j = perm[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n || perm[static_cast<std::size_t>(j)] != i)
      throw InvalidAction("boundary permutation is not an involution");
  }

  int invariant = 0;
  for (int i = 0; i < n; ++i) {
    int j = perm[static_cast<std::size_t>(i)];
    if (j == i)
      ++invariant;
    else
      q.classes[static_cast<std::size_t>(i)].swapped_with = j;
  }
  int pairs = (n - invariant) / 2;

  if (inv.map == SurfaceMap::Antipodal) {
    if (invariant != 0)
      throw InvalidAction("the antipodal map fixes no boundary class");
    q.arc_data = {0, 0, "free involution: no exceptional set of order 2"};
  } else if (invariant > 0) {
    q.arc_data = {2 * invariant, 0,
                  std::to_string(invariant) + " arc(s) of order 2 at each end of the interval"};
  } else {
    q.arc_data = {0, 2, "one circle of order 2 at each end of the interval"};
  }
  q.removed_balls = invariant > 0 ? invariant - 1 : 0;
  q.removed_solid_tori = pairs;
}

} // namespace

QuotientDescriptor assemble_quotient(SeifertInvariants const &raw, ActionDescription const &action) {
  SeifertInvariants m = normalize(raw);
  std::vector<BoundarySpec> boundaries =
      action.boundaries.empty() ? default_boundaries(m, action.drilled_fibers) : action.boundaries;
  for (auto const &b : boundaries) {
    if (b.orientation != 1 && b.orientation != -1)
      throw InvalidAction("boundary orientation must be +1 or -1");
    Integer det = b.filling.det();
    if (det != 1 && det != -1)
      throw NonUnimodular("filling " + to_string(b.filling) + " has determinant " + to_string(det));
  }
  if (action.generators.size() > 2)
    throw InvalidAction("the rotation part must be generated by at most two rotations");
  if (action.fiber_reversing && !action.involution)
    throw InvalidAction("a fiber-reversing action needs an involution descriptor");

  auto classes = boundary_classes(action, static_cast<int>(boundaries.size()));
  QuotientDescriptor q;
  q.base_kind = action.fiber_reversing ? BaseKind::FoldedBall : BaseKind::ProductOverQuotientSurface;
  q.citations.push_back(action.fiber_reversing ? "fiber-reversing-quotient-is-folded-ball"
                                               : "fiber-preserving-quotient-is-product");

  for (std::size_t j = 0; j < classes.size(); ++j) {
    ClassResult c;
    c.members = classes[j];
    auto const &rep = boundaries[static_cast<std::size_t>(c.members.front())];
    for (int i : c.members)
      if (boundaries[static_cast<std::size_t>(i)].orientation != rep.orientation)
        throw InvalidAction("boundaries in one orbit must share an orientation sign");
    if (c.members.size() > 1 && !rep.stabilizer)
      throw InvalidAction("boundary " + std::to_string(c.members.front()) +
                          " lies in an orbit of size " + std::to_string(c.members.size()) +
                          "; its stabilizer generators must be given");
    c.orientation = rep.orientation;
    c.filling = rep.filling;
    auto gens = rep.stabilizer ? *rep.stabilizer : action.generators;
    if (gens.size() > 2)
      throw InvalidAction("a torus stabilizer is generated by at most two rotations");
    if (c.orientation < 0)
      for (auto &g : gens)
        g = flip_second(g);
    c.torus_spec = {gens, action.fiber_reversing};
    c.expected_k = at_or_none(action.expected_k, j);
    q.classes.push_back(std::move(c));
  }

  if (action.fiber_reversing) {
    apply_involution(q, *action.involution);
    // A torus swapped with another by the involution keeps only the
    // orientation-preserving stabilizer, so it is filled by V(k), not B(k).
    for (auto &c : q.classes)
      if (c.swapped_with >= 0)
        c.torus_spec.fiber_reversing = false;
  }

  // l values: defaults or overrides, then the last free class absorbs the constraint.
  std::size_t n = q.classes.size();
  std::vector<Integer> l(n);
  std::optional<std::size_t> free_class;
  Integer sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    auto const &c = q.classes[j];
    if (auto o = at_or_none(action.l_overrides, j)) {
      if (!torus_l_valid(c.torus_spec, *o))
        throw InvalidAction("l override " + to_string(*o) + " is not admissible for class " +
                            std::to_string(j));
      l[j] = *o;
    } else {
      l[j] = default_torus_l(c.torus_spec);
      free_class = j;
    }
  }
  for (std::size_t j = 0; j < n; ++j)
    if (j != free_class)
      sum += q.classes[j].orientation * l[j] * static_cast<long>(q.classes[j].members.size());
  if (free_class) {
    auto &c = q.classes[*free_class];
    Integer weight = c.orientation * static_cast<long>(c.members.size());
    if (sum % weight != 0)
      throw ConstraintViolation("the l value of class " + std::to_string(*free_class) +
                                " would have to be " + to_string(Rational(-sum, weight)) +
                                ", which is not an integer");
    Integer forced = -sum / weight;
    if (!torus_l_valid(c.torus_spec, forced))
      throw ConstraintViolation("the l value forced on class " + std::to_string(*free_class) +
                                " is " + to_string(forced) + ", which the projection does not admit");
    l[*free_class] = forced;
    c.l_forced = true;
  } else if (sum != 0) {
    throw ConstraintViolation("every l is fixed and sum sign * l * #orbit = " + to_string(sum) +
                              " instead of 0");
  }

  for (std::size_t j = 0; j < n; ++j) {
    auto &c = q.classes[j];
    auto const &rep = boundaries[static_cast<std::size_t>(c.members.front())];
    FillingOverrides ov{l[j], at_or_none(action.z_overrides, j), rep.filled_generators};
    c.projected = projected_filling(c.torus_spec, c.filling, ov);
    c.formula_k = c.projected.piece.k;
    std::vector<RotationPair> filled = c.projected.boundary_generators;
    c.oracle_k = core_order(filled);
    if (c.formula_k != c.oracle_k)
      q.warnings.push_back("class " + std::to_string(j) + ": closed-form core order " +
                           to_string(c.formula_k) + " differs from enumeration " +
                           to_string(c.oracle_k) + "; the enumerated value is used");
    c.projected.piece.k = c.oracle_k;
    if (c.expected_k && *c.expected_k != c.oracle_k)
      q.warnings.push_back("class " + std::to_string(j) + ": published core order " +
                           to_string(*c.expected_k) + " differs from the computed " +
                           to_string(c.oracle_k) + " for filling generators " +
                           [&] {
                             std::string s;
                             for (auto const &g : filled)
                               s += to_string(g);
                             return s;
                           }());
    q.l_assignments.push_back(l[j]);
  }

  for (std::size_t j = 0; j < n; ++j) {
    auto const &c = q.classes[j];
    if (c.swapped_with >= 0 && c.swapped_with < static_cast<int>(j))
      continue; // the partner already produced this piece
    q.pieces.push_back({static_cast<int>(j), c.projected.piece});
  }
  if (!action.fiber_reversing) {
    q.arc_data = {0, 0, "no fiber reversal: no exceptional set of order 2"};
    q.removed_solid_tori = static_cast<int>(n);
  }
  q.constraint_sum = l_constraint_sum(q);
  q.citations.push_back("core-order-by-stabilizer");
  q.citations.push_back("projected-filling-solve");
  return q;
}

Integer l_constraint_sum(QuotientDescriptor const &q) {
  Integer sum = 0;
  for (std::size_t j = 0; j < q.classes.size(); ++j) {
    auto const &c = q.classes[j];
    sum += c.orientation * q.l_assignments[j] * static_cast<long>(c.members.size());
  }
  return sum;
}

} // namespace seifert
