#pragma once

// Torus rotations (u, v) -> (e^{2 pi i alpha} u, e^{2 pi i beta} v), stored as
// exact rationals reduced into [0, 1).

#include "seifert/lattice.hpp"
#include "seifert/numeric.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace seifert {

struct RotationPair {
  Rational alpha; // first coordinate, in turns
  Rational beta;  // second coordinate, in turns

  RotationPair() = default;
  RotationPair(Rational a, Rational b);

  bool is_identity() const { return alpha == 0 && beta == 0; }
  /// Order of the rotation: lcm of the two denominators.
  Integer order() const;

  friend bool operator==(RotationPair const &, RotationPair const &) = default;
};

/// Accepts "a/b,c/d" with optional surrounding parentheses.  Throws std::invalid_argument.
RotationPair parse_rotation(std::string_view text);
std::string to_string(RotationPair const &r);

/// M * (alpha, beta)^T reduced mod 1.
RotationPair transform(Mat2 const &m, RotationPair const &r);
/// M^{-1} * (alpha, beta)^T reduced mod 1; M must be unimodular.
RotationPair transform_inverse(Mat2 const &m, RotationPair const &r);

/// (alpha, -beta): the same rotation read through a boundary torus whose
/// second circle carries the opposite orientation.
RotationPair flip_second(RotationPair const &r);

} // namespace seifert
