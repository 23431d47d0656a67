#pragma once

// Quotient orbifold of a Seifert manifold by a finite fiber-preserving action:
// the exceptional order of each filling solid torus, the projection matrices
// on boundary tori, the projected filling slopes, and the folded base piece
// when some element reverses the fibers.

#include "seifert/invariants.hpp"
#include "seifert/lattice.hpp"
#include "seifert/rotation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seifert {

/// Malformed action description (bad permutation, missing stabilizer, ...).
class InvalidAction : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The l values cannot be chosen so that sum sign * l * #orbit vanishes.
class ConstraintViolation : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Rotation part of a stabilizer (one generator: cyclic, two: Z_m x Z_l), plus
/// whether it also contains the fiber reversal (u, v) -> (u^-1, v^-1).
struct TorusActionSpec {
  std::vector<RotationPair> generators;
  bool fiber_reversing = false;
};

enum class PieceKind { SolidTorusVk, ConwayBallBk };

char const *to_string(PieceKind kind);

struct QuotientPiece {
  PieceKind kind = PieceKind::SolidTorusVk;
  Integer k = 1;
  Mat2 slope; // the projected filling D'
};

/// Each rotation vector (alpha, beta) becomes d^{-1} (alpha, beta) mod 1.
std::vector<RotationPair> induced_action_on_filling(std::vector<RotationPair> const &ambient,
                                                    Mat2 const &d);

/// k = b2 / gcd(a2, b2).
Integer core_order_cyclic(RotationPair const &g);

/// k = b2 d2 gcd(a2,c2) / gcd(d2 gcd(a2,c2) gcd(a2,b2), a2 b1 c1 d2 z + b2 c2 d1)
/// with z the least non-negative solution of a1 z == -1 (mod a2).
Integer core_order_bicyclic(RotationPair const &g1, RotationPair const &g2);

/// Dispatches on the number of generators (0, 1 or 2).
Integer formula_core_order(TorusActionSpec const &spec);

QuotientPiece quotient_piece(TorusActionSpec const &spec, Mat2 const &slope);

/// Whether l may appear in the upper right entry of the torus projection.
bool torus_l_valid(TorusActionSpec const &spec, Integer const &l);
/// Least non-negative valid l in the cyclic case, lcm(b2, d2) in the bicyclic case.
Integer default_torus_l(TorusActionSpec const &spec);

/// Cyclic: [[lcm(a2,b2)/b2, l], [0, b2]].  Bicyclic: [[m l'/lcm(b2,d2), l], [0, lcm(b2,d2)]]
/// with m = lcm(a2,b2), l' = lcm(c2,d2).  Throws InvalidAction for an invalid l.
Mat2 torus_projection_matrix(TorusActionSpec const &spec, std::optional<Integer> const &l = {});

/// Cyclic: [[a2, 0], [z, lcm(a2,b2)/a2]].  Bicyclic: [[lcm(a2,c2), 0], [z, m l'/lcm(a2,c2)]].
/// z defaults to 0.
Mat2 boundary_projection_matrix(TorusActionSpec const &spec, std::optional<Integer> const &z = {});

struct FillingOverrides {
  std::optional<Integer> l;
  std::optional<Integer> z;
  std::optional<std::vector<RotationPair>> boundary_generators;
};

struct ProjectedFilling {
  QuotientPiece piece;
  std::vector<RotationPair> boundary_generators;
  Mat2 torus_projection;
  Mat2 boundary_projection;
  Integer l;
  Integer z;
};

/// Solves pT d = D' pV.  Without a z override the least z in [0, det pV) that
/// makes D' integral is used; with one, a non-integral D' is an error.
ProjectedFilling projected_filling(TorusActionSpec const &torus, Mat2 const &d,
                                   FillingOverrides const &overrides = {});

// ---------------------------------------------------------------- assembly

enum class SurfaceMap { Rotation, Reflection, Antipodal };

char const *to_string(SurfaceMap map);
SurfaceMap parse_surface_map(std::string const &name);

/// The involution induced on the quotient surface by a fiber-reversing element,
/// given by its type and its permutation of the quotient boundary classes.
struct InvolutionDescriptor {
  SurfaceMap map = SurfaceMap::Reflection;
  std::vector<int> boundary_permutation;
};

struct BoundarySpec {
  Mat2 filling;
  int orientation = 1; // -1 when the product structure orients this torus negatively
  std::optional<std::vector<RotationPair>> stabilizer; // required in orbits of size > 1
  std::optional<std::vector<RotationPair>> filled_generators;
};

struct ActionDescription {
  std::vector<RotationPair> generators; // rotation part on S^1 x F
  bool fiber_reversing = false;
  std::optional<InvolutionDescriptor> involution;
  std::vector<BoundarySpec> boundaries;  // empty: one per Seifert pair, then (1,b), then drilled fibers
  std::vector<std::vector<int>> orbits;  // boundary orbits under the rotation part; empty: singletons
  int drilled_fibers = 0;                // invariant isolated fibers, refilled with (1,0)
  std::vector<std::optional<Integer>> l_overrides; // per quotient class
  std::vector<std::optional<Integer>> z_overrides; // per quotient class
  std::vector<std::optional<Integer>> expected_k;  // published core orders, per class
};

enum class BaseKind { ProductOverQuotientSurface, FoldedBall };

char const *to_string(BaseKind kind);

struct ArcData {
  int arcs = 0;
  int circles = 0;
  std::string description;
};

struct ClassResult {
  std::vector<int> members;
  int orientation = 1;
  TorusActionSpec torus_spec;
  Mat2 filling;
  ProjectedFilling projected;
  bool l_forced = false;
  Integer formula_k;
  Integer oracle_k;
  std::optional<Integer> expected_k;
  /// Index of the partner class when the involution swaps this class, else -1.
  int swapped_with = -1;
};

struct PieceEntry {
  int boundary_class = 0;
  QuotientPiece piece;
};

struct QuotientDescriptor {
  BaseKind base_kind = BaseKind::ProductOverQuotientSurface;
  ArcData arc_data;
  std::vector<ClassResult> classes;
  std::vector<PieceEntry> pieces;
  std::vector<Integer> l_assignments; // one per quotient class
  Integer constraint_sum;             // sum of sign * l * #orbit; always 0 on success
  int removed_balls = 0;
  int removed_solid_tori = 0;
  std::vector<std::string> warnings;
  std::vector<std::string> citations;
};

/// Default filling for a normalized pair (q, p): [[x, p], [y, q]] with
/// x q - p y = -1 and y the non-positive solution of p y == 1 (mod q) closest to 0.
Mat2 default_filling(SeifertPair const &pair);

/// Boundary list used when the description gives none.
std::vector<BoundarySpec> default_boundaries(SeifertInvariants const &m, int drilled_fibers);

QuotientDescriptor assemble_quotient(SeifertInvariants const &m, ActionDescription const &action);

/// Sum of sign * l * #orbit over the classes of a descriptor.
Integer l_constraint_sum(QuotientDescriptor const &q);

} // namespace seifert
