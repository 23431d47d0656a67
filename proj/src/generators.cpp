#include "seifert/generators.hpp"

#include <algorithm>
#include <numeric>

namespace seifert::gen {

long uniform(Rng &rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

namespace {

long coprime_residue(Rng &rng, long q) {
  for (;;) {
    long p = uniform(rng, 1, q - 1);
    if (std::gcd(p, q) == 1)
      return p;
  }
}

SeifertPair normalized_pair(Rng &rng, long q) { return {q, coprime_residue(rng, q)}; }

SeifertInvariants sphere(std::vector<SeifertPair> pairs, long b) {
  return {0, BaseOrientation::Orientable, std::move(pairs), b};
}

// Draws b until the Euler class is nonzero.
void fix_euler_class(Rng &rng, SeifertInvariants &m, long b_range) {
  while (euler_class(m) == 0 || (m.pairs.empty() && m.b == 0))
    m.b = uniform(rng, -b_range, b_range);
}

SeifertInvariants elliptic_shape(Rng &rng, int shape, int max_q, long b_range) {
  long b = uniform(rng, -b_range, b_range);
  SeifertInvariants m;
  switch (shape) {
  case 0: m = sphere({}, b); break;
  case 1: m = sphere({normalized_pair(rng, uniform(rng, 2, max_q))}, b); break;
  case 2: {
    auto p1 = normalized_pair(rng, uniform(rng, 2, max_q));
    // Equal pairs are rare under independent draws; force them a third of the time.
    auto p2 = uniform(rng, 0, 2) == 0 ? p1 : normalized_pair(rng, uniform(rng, 2, max_q));
    m = sphere({p1, p2}, b);
    break;
  }
  case 3:
    m = sphere({{2, 1}, {2, 1}, normalized_pair(rng, uniform(rng, 2, max_q))}, b);
    break;
  case 4:
    m = {1, BaseOrientation::NonOrientable, {normalized_pair(rng, uniform(rng, 2, max_q))}, b};
    break;
  case 5: m = sphere({{2, 1}, normalized_pair(rng, 3), normalized_pair(rng, 3)}, b); break;
  case 6: m = sphere({{2, 1}, normalized_pair(rng, 3), normalized_pair(rng, 4)}, b); break;
  default: m = sphere({{2, 1}, normalized_pair(rng, 3), normalized_pair(rng, 5)}, b); break;
  }
  std::shuffle(m.pairs.begin(), m.pairs.end(), rng);
  fix_euler_class(rng, m, b_range);
  return m;
}

} // namespace

SeifertInvariants raw_invariants(Rng &rng, int max_q, long p_range) {
  SeifertInvariants m;
  m.orientation = uniform(rng, 0, 1) ? BaseOrientation::Orientable : BaseOrientation::NonOrientable;
  m.genus = uniform(rng, m.orientation == BaseOrientation::Orientable ? 0 : 1, 3);
  long n = uniform(rng, 0, 5);
  for (long i = 0; i < n; ++i) {
    long q = uniform(rng, 1, max_q);
    long p;
    do
      p = uniform(rng, -p_range, p_range);
    while (std::gcd(p, q) != 1);
    m.pairs.push_back({q, p});
  }
  m.b = uniform(rng, -p_range, p_range);
  return m;
}

SeifertInvariants elliptic_invariants(Rng &rng, int max_q, long b_range) {
  return elliptic_shape(rng, static_cast<int>(uniform(rng, 0, 7)), max_q, b_range);
}

SeifertInvariants elliptic_sphere_invariants(Rng &rng, int max_q, long b_range) {
  static constexpr int shapes[] = {0, 1, 2, 3, 5, 6, 7};
  return elliptic_shape(rng, shapes[uniform(rng, 0, 6)], max_q, b_range);
}

Rational fraction(Rng &rng, int max_den) {
  long q = uniform(rng, 1, max_den);
  return make_rational(uniform(rng, 0, q - 1), q);
}

RotationPair rotation(Rng &rng, int max_den) {
  Rational a = fraction(rng, max_den);
  return {a, fraction(rng, max_den)};
}

Mat2 unimodular(Rng &rng, int steps, long entry) {
  Mat2 m = uniform(rng, 0, 1) ? Mat2::identity() : Mat2(1, 0, 0, -1);
  for (int i = 0; i < steps; ++i) {
    long t = uniform(rng, -entry, entry);
    Mat2 e = uniform(rng, 0, 1) ? Mat2(1, t, 0, 1) : Mat2(1, 0, t, 1);
    m = compose(m, e);
  }
  return m;
}

QuotientCase quotient_case(Rng &rng) {
  QuotientCase c;
  long k = uniform(rng, 0, 3);
  std::vector<SeifertPair> pairs;
  for (long i = 0; i < k; ++i)
    pairs.push_back(normalized_pair(rng, uniform(rng, 2, 7)));
  c.invariants = sphere(std::move(pairs), uniform(rng, -5, 5));

  auto &a = c.action;
  a.drilled_fibers = static_cast<int>(uniform(rng, 0, 1));
  long gens = uniform(rng, 0, 4); // mostly cyclic
  if (gens >= 1)
    a.generators.push_back(rotation(rng, 6));
  if (gens == 4)
    a.generators.push_back(rotation(rng, 6));

  auto boundaries = default_boundaries(c.invariants, a.drilled_fibers);
  int n = static_cast<int>(boundaries.size());

  a.fiber_reversing = uniform(rng, 0, 1) == 1;
  if (a.fiber_reversing) {
    InvolutionDescriptor inv;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    inv.boundary_permutation.assign(static_cast<std::size_t>(n), 0);
    std::iota(inv.boundary_permutation.begin(), inv.boundary_permutation.end(), 0);
    bool antipodal = n % 2 == 0 && uniform(rng, 0, 2) == 0;
    long swaps = antipodal ? n / 2 : uniform(rng, 0, n / 2);
    for (long s = 0; s < swaps; ++s) {
      int x = order[static_cast<std::size_t>(2 * s)], y = order[static_cast<std::size_t>(2 * s + 1)];
      inv.boundary_permutation[static_cast<std::size_t>(x)] = y;
      inv.boundary_permutation[static_cast<std::size_t>(y)] = x;
    }
    inv.map = antipodal ? SurfaceMap::Antipodal : SurfaceMap::Reflection;
    a.involution = inv;
  }

  // Pin l on some classes to another admissible value; the last class stays free.
  a.l_overrides.assign(static_cast<std::size_t>(n), std::nullopt);
  for (int j = 0; j + 1 < n; ++j) {
    if (uniform(rng, 0, 2) != 0)
      continue;
    TorusActionSpec spec{a.generators, false};
    Integer period = 1;
    for (auto &g : spec.generators) {
      if (boundaries[static_cast<std::size_t>(j)].orientation < 0)
        g = flip_second(g);
      period = lcm(period, g.beta.get_den());
    }
    a.l_overrides[static_cast<std::size_t>(j)] =
        default_torus_l(spec) + period * uniform(rng, -2, 2);
  }
  return c;
}

} // namespace seifert::gen
