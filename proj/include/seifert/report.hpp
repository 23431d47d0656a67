#pragma once

// JSON views of the library types, and the quotient input format.

#include "seifert/atlas.hpp"
#include "seifert/classify.hpp"
#include "seifert/invariants.hpp"
#include "seifert/lattice.hpp"
#include "seifert/oracle.hpp"
#include "seifert/quotient.hpp"

#include <json.hpp>

namespace seifert {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Numbers when they fit in 64 bits, decimal strings otherwise.
Json to_json(Integer const &x);
/// "p/q", or "p" when integral.
Json to_json(Rational const &x);
Json to_json(Mat2 const &m);
Json to_json(RationalMat2 const &m);
Json to_json(RotationPair const &r);
Json to_json(SeifertInvariants const &m);
Json to_json(GeometryVerdict const &v);
Json to_json(ReversalVerdict const &v);
Json to_json(GroupFamily const &f);
Json to_json(S2ActionRow const &row);
Json to_json(LcmAudit const &a);
Json to_json(SweepReport const &r);
Json to_json(QuotientDescriptor const &q);
Json to_json(LensSpace const &l);

/// Strict readers; throw InvalidAction (or std::invalid_argument) on malformed data.
Integer integer_from_json(Json const &j);
Mat2 mat2_from_json(Json const &j);
RotationPair rotation_from_json(Json const &j); // "a/b,c/d" or ["a/b","c/d"]

struct QuotientInput {
  SeifertInvariants invariants;
  ActionDescription action;
};

/// Reads {invariants, generators, fiber_reversing, involution, boundaries | fillings,
/// orbits, drilled_fibers, overrides {l, z}, expected {k}}.
QuotientInput quotient_input_from_json(Json const &j);

/// Plain-text narrative of a quotient computation.
std::string quotient_text(QuotientInput const &in, QuotientDescriptor const &q);

} // namespace seifert
