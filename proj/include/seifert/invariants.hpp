#pragma once

// Seifert invariants (g, e | (q1,p1), ..., (qn,pn), (1,b)): text form,
// normalization, Euler class, base orbifold and the elliptic test.

#include "seifert/numeric.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seifert {

enum class BaseOrientation { Orientable, NonOrientable }; // o1 / n2

struct SeifertPair {
  Integer q;
  Integer p;

  friend bool operator==(SeifertPair const &, SeifertPair const &) = default;
};

struct SeifertInvariants {
  Integer genus;
  BaseOrientation orientation = BaseOrientation::Orientable;
  std::vector<SeifertPair> pairs;
  Integer b; // obstruction class

  friend bool operator==(SeifertInvariants const &, SeifertInvariants const &) = default;
};

/// Malformed invariant text.  `position` is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string const &what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Well-formed text describing an invalid Seifert pair (q <= 0, gcd(q,p) != 1).
class InvalidInvariants : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Base surfaces outside S^2 and P^2 are accepted by the data model but not classified.
class OutOfScopeGeometry : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Grammar: "(" g "," ("o1"|"n2") "|" pair ("," pair)* ")"; whitespace is ignored.
/// A trailing (1,b) pair becomes the obstruction class; otherwise b = 0.
/// The result is not normalized.
SeifertInvariants parse_invariants(std::string_view text);

/// Canonical text; always ends with the (1,b) pair.
std::string format_invariants(SeifertInvariants const &m);

/// Reduces every p into (0, q), folding integer parts and (1,c) pairs into b.
SeifertInvariants normalize(SeifertInvariants const &raw);
bool is_normalized(SeifertInvariants const &m);

/// e = -(b + sum p_i/q_i), evaluated on the pairs as presented.
Rational euler_class(SeifertInvariants const &m);

enum class Underlying { Sphere, Disc, ProjectivePlane };

struct BaseOrbifold {
  Underlying underlying = Underlying::Sphere;
  std::vector<Integer> cone_orders; // one per critical fiber, in presentation order
  Rational chi_orb;
};

/// Base orbifold of a genus-0 orientable or genus-1 non-orientable base.
/// Throws OutOfScopeGeometry for any other base surface.
BaseOrbifold base_orbifold(SeifertInvariants const &m);

/// Orbifold Euler characteristic chi(B_U) - sum (1 - 1/q_i) for any base surface.
Rational orbifold_euler_characteristic(SeifertInvariants const &m);

/// Shapes of closed base orbifolds with positive Euler characteristic.
enum class EllipticBase {
  Sphere,          // S2
  OneCone,         // S2(q)
  TwoCones,        // S2(q1,q2)
  Dihedral,        // S2(2,2,q)
  Tetrahedral,     // S2(2,3,3)
  Octahedral,      // S2(2,3,4)
  Icosahedral,     // S2(2,3,5)
  ProjectiveCone,  // P2(q)
  ProjectivePlane, // P2, no cone points
};

std::string to_string(EllipticBase shape);

struct GeometryVerdict {
  Rational chi_orb;
  Rational euler_class;
  bool elliptic = false;
  bool in_scope = true; // false for base surfaces other than S2 / P2
  std::optional<EllipticBase> shape; // set whenever chi_orb > 0
  std::string base_label;            // e.g. "S2(2,3,5)"
};

/// elliptic <=> chi_orb > 0 and e != 0.  Normalizes its input first.
GeometryVerdict geometry_verdict(SeifertInvariants const &m);

char const *to_string(Underlying u);
char const *to_string(BaseOrientation o);

} // namespace seifert
