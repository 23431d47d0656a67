#pragma once

// Brute-force check of the core-order formulas: enumerate the finite group of
// torus rotations generated by a few rational rotation pairs and count the
// elements that fix the first circle.  Shares no code with the formulas.

#include "seifert/rotation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace seifert {

/// Finite subgroup of (Q/Z)^2, held as points of the lattice (1/N)Z^2 mod 1.
class RotationGroup {
public:
  struct Point {
    std::int64_t x;
    std::int64_t y;
  };

  RotationGroup(std::int64_t denominator, std::vector<Point> points)
      : n_(denominator), points_(std::move(points)) {}

  std::int64_t denominator() const { return n_; }
  std::size_t order() const { return points_.size(); }
  std::vector<Point> const &points() const { return points_; }
  std::vector<RotationPair> elements() const;
  bool contains(RotationPair const &r) const;
  /// Elements whose first coordinate is 0 mod 1.
  std::size_t core_fixing_count() const;

private:
  std::int64_t n_;
  std::vector<Point> points_;
};

/// Breadth-first closure under addition mod 1.  Throws std::out_of_range if the
/// common denominator exceeds 2^31.
RotationGroup generate(std::vector<RotationPair> const &generators);

/// Number of group elements with trivial first coordinate: the order of the
/// exceptional core of the quotient solid torus.
Integer core_order(std::vector<RotationPair> const &generators);

enum class SweepFormula { Cyclic, Bicyclic };

char const *to_string(SweepFormula f);
SweepFormula parse_sweep_formula(std::string const &name); // "cyclic-core" | "bicyclic-core"

struct Discrepancy {
  std::vector<RotationPair> generators;
  Integer formula;
  Integer oracle;
};

struct SweepOptions {
  int max_denominator = 8;
  int random_cases = 0;
  int random_max_denominator = 24;
  std::uint64_t seed = 20181;
};

struct SweepReport {
  SweepFormula formula = SweepFormula::Cyclic;
  int max_denominator = 0;
  std::size_t exhaustive_cases = 0;
  std::size_t random_cases = 0;
  int random_max_denominator = 0;
  std::uint64_t seed = 0;
  std::vector<Discrepancy> discrepancies;

  bool clean() const { return discrepancies.empty(); }
};

/// Reduced fractions p/q in [0, 1) with q <= bound, in order of (q, p).
std::vector<Rational> reduced_fractions(int bound);

/// Compares the closed-form core order with core_order over every rotation
/// pair (or pair of pairs) built from reduced_fractions(max_denominator), then
/// over random_cases pairs drawn with a fixed seed.
SweepReport sweep(SweepFormula formula, SweepOptions const &options);

} // namespace seifert
