#pragma once

// 2x2 integer matrices acting on column vectors (meridian first, fiber
// second).  They record filling maps and the maps induced on H1 of tori by
// quotient projections.

#include "seifert/numeric.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace seifert {

class FrameMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// The conjugation solve produced a non-integral matrix: the projection data are inconsistent.
class NonIntegralSolution : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class NonUnimodular : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct Mat2 {
  // Row major: {a11, a12, a21, a22}.
  std::array<Integer, 4> a{1, 0, 0, 1};
  // Advisory frame labels; an empty label matches any frame.
  std::string source_frame;
  std::string target_frame;

  Mat2() = default;
  Mat2(Integer a11, Integer a12, Integer a21, Integer a22, std::string source = {},
       std::string target = {});

  static Mat2 identity() { return {}; }

  Integer const &operator()(int row, int col) const { return a[2 * row + col]; }
  Integer &operator()(int row, int col) { return a[2 * row + col]; }
  Integer det() const { return a[0] * a[3] - a[1] * a[2]; }

  /// Entry-wise equality; frames are not compared.
  bool same_entries(Mat2 const &other) const { return a == other.a; }
};

struct RationalMat2 {
  std::array<Rational, 4> a{1, 0, 0, 1};

  Rational const &operator()(int row, int col) const { return a[2 * row + col]; }
  Rational &operator()(int row, int col) { return a[2 * row + col]; }
  Rational det() const { return a[0] * a[3] - a[1] * a[2]; }
  bool integral() const;
  friend bool operator==(RationalMat2 const &, RationalMat2 const &) = default;
};

RationalMat2 to_rational(Mat2 const &m);
RationalMat2 multiply(RationalMat2 const &x, RationalMat2 const &y);

/// a ∘ b.  Requires b.target_frame == a.source_frame (empty labels match anything).
Mat2 compose(Mat2 const &a, Mat2 const &b);

/// Exact inverse over Q.  Throws SingularMatrix when det == 0.
RationalMat2 invert_rational(Mat2 const &a);

/// Solves torus_proj * d == result * boundary_proj over Q, i.e.
/// result = torus_proj * d * boundary_proj^{-1}, without integrality checks.
RationalMat2 solve_conjugate_rational(Mat2 const &torus_proj, Mat2 const &d,
                                      Mat2 const &boundary_proj);

/// As above, but the result must be an integer matrix with determinant +-1.
/// The result maps the boundary_proj target frame to the torus_proj target frame.
Mat2 solve_conjugate(Mat2 const &torus_proj, Mat2 const &d, Mat2 const &boundary_proj);

/// Unoriented slope (p, q); (p, q) and (-p, -q) are identified and stored with q > 0,
/// or q == 0 and p > 0.
struct FillingSlope {
  Integer q;
  Integer p;

  friend bool operator==(FillingSlope const &, FillingSlope const &) = default;
};

FillingSlope make_slope(Integer p, Integer q);

/// Slope read from the second column (p over q) of a filling matrix.
FillingSlope slope_of(Mat2 const &filling);

/// Filling matrix [[-1, b], [0, 1]] of a trivially fibered solid torus glued with obstruction b.
Mat2 trivial_filling(Integer const &b);

struct LensSpace {
  Integer p;
  Integer q;
  Mat2 gluing; // the product whose entries give L(p, q)
};

/// Gluing two trivially fibered solid tori across S^1 x A, each with a (1,b)
/// filling: [[-1,b],[0,1]] [[1,0],[0,-1]] [[-1,b],[0,1]] = [[1,-2b],[0,-1]],
/// which is the lens space L(2b, 1).
LensSpace lens_from_trivial_fillings(Integer const &b);

std::string to_string(Mat2 const &m);
std::string to_string(RationalMat2 const &m);

} // namespace seifert
