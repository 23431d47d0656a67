#pragma once

// Seeded random inputs for property checks.  Deterministic for a given seed
// on a given standard library.

#include "seifert/invariants.hpp"
#include "seifert/lattice.hpp"
#include "seifert/quotient.hpp"
#include "seifert/rotation.hpp"

#include <random>

namespace seifert::gen {

using Rng = std::mt19937_64;

long uniform(Rng &rng, long lo, long hi); // inclusive

/// Any well-formed tuple: pairs with 1 <= q <= max_q and p in [-p_range, p_range], coprime.
SeifertInvariants raw_invariants(Rng &rng, int max_q = 12, long p_range = 40);

/// Normalized elliptic invariants on one of the eight listed elliptic bases.
SeifertInvariants elliptic_invariants(Rng &rng, int max_q = 9, long b_range = 12);

/// Same, restricted to genus-0 orientable bases.
SeifertInvariants elliptic_sphere_invariants(Rng &rng, int max_q = 9, long b_range = 12);

/// Reduced p/q in [0, 1) with 1 <= q <= max_den.
Rational fraction(Rng &rng, int max_den);
RotationPair rotation(Rng &rng, int max_den);

/// Product of a few elementary matrices; determinant +-1.
Mat2 unimodular(Rng &rng, int steps = 4, long entry = 3);

/// Random quotient input on S^2-based invariants: one or two rotations, random
/// fiber reversal with a reflection or antipodal involution, and l overrides on
/// some classes.  Not every draw is consistent; callers count successes.
struct QuotientCase {
  SeifertInvariants invariants;
  ActionDescription action;
};
QuotientCase quotient_case(Rng &rng);

} // namespace seifert::gen
