#include "seifert/oracle.hpp"

#include "seifert/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace seifert {

namespace {

constexpr std::int64_t kMaxDenominator = std::int64_t(1) << 31;
// Groups on lattices up to this many points use a flat visited buffer.
constexpr std::int64_t kFlatLimit = std::int64_t(1) << 22;

std::int64_t common_denominator(std::vector<RotationPair> const &gens) {
  Integer n = 1;
  for (auto const &g : gens) {
    n = lcm(n, g.alpha.get_den());
    n = lcm(n, g.beta.get_den());
  }
  auto v = to_int64(n);
  if (!v || *v > kMaxDenominator)
    throw std::out_of_range("rotation denominators too large for enumeration: " + to_string(n));
  return *v;
}

std::int64_t scaled(Rational const &x, std::int64_t n) {
  Integer v = x.get_num() * (Integer(static_cast<long>(n)) / x.get_den());
  return *to_int64(v);
}

// Visited marks stamped with a generation number so the buffer never needs clearing.
struct FlatVisited {
  std::vector<std::uint32_t> stamp;
  std::uint32_t generation = 0;

  void reset(std::size_t size) {
    if (stamp.size() < size)
      stamp.assign(size, 0);
    if (++generation == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      generation = 1;
    }
  }
  bool insert(std::size_t i) {
    if (stamp[i] == generation)
      return false;
    stamp[i] = generation;
    return true;
  }
};

template <typename Visited>
std::vector<RotationGroup::Point> closure(std::vector<RotationGroup::Point> const &gens,
                                          std::int64_t n, Visited &&insert) {
  std::vector<RotationGroup::Point> out{{0, 0}};
  insert(0, 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    auto p = out[head];
    for (auto const &g : gens) {
      std::int64_t x = p.x + g.x;
      std::int64_t y = p.y + g.y;
      if (x >= n)
        x -= n;
      if (y >= n)
        y -= n;
      if (insert(x, y))
        out.push_back({x, y});
    }
  }
  return out;
}

} // namespace

std::vector<RotationPair> RotationGroup::elements() const {
  std::vector<RotationPair> out;
  out.reserve(points_.size());
  for (auto const &p : points_)
    out.emplace_back(make_rational(p.x, n_), make_rational(p.y, n_));
  return out;
}

bool RotationGroup::contains(RotationPair const &r) const {
  Integer n(static_cast<long>(n_));
  if (n % r.alpha.get_den() != 0 || n % r.beta.get_den() != 0)
    return false;
  std::int64_t x = scaled(r.alpha, n_);
  std::int64_t y = scaled(r.beta, n_);
  for (auto const &p : points_)
    if (p.x == x && p.y == y)
      return true;
  return false;
}

std::size_t RotationGroup::core_fixing_count() const {
  std::size_t count = 0;
  for (auto const &p : points_)
    if (p.x == 0)
      ++count;
  return count;
}

RotationGroup generate(std::vector<RotationPair> const &generators) {
  std::int64_t n = common_denominator(generators);
  std::vector<RotationGroup::Point> gens;
  for (auto const &g : generators)
    if (!g.is_identity())
      gens.push_back({scaled(g.alpha, n), scaled(g.beta, n)});

  if (n * n <= kFlatLimit) {
    thread_local FlatVisited visited;
    visited.reset(static_cast<std::size_t>(n * n));
    return {n, closure(gens, n, [&](std::int64_t x, std::int64_t y) {
              return visited.insert(static_cast<std::size_t>(x * n + y));
            })};
  }
  std::unordered_set<std::int64_t> seen;
  return {n, closure(gens, n, [&](std::int64_t x, std::int64_t y) {
            return seen.insert(x * n + y).second;
          })};
}

Integer core_order(std::vector<RotationPair> const &generators) {
  return Integer(static_cast<unsigned long>(generate(generators).core_fixing_count()));
}

char const *to_string(SweepFormula f) {
  return f == SweepFormula::Cyclic ? "cyclic-core" : "bicyclic-core";
}

SweepFormula parse_sweep_formula(std::string const &name) {
  if (name == "cyclic-core")
    return SweepFormula::Cyclic;
  if (name == "bicyclic-core")
    return SweepFormula::Bicyclic;
  throw std::invalid_argument("unknown formula '" + name +
                              "' (expected cyclic-core or bicyclic-core)");
}

std::vector<Rational> reduced_fractions(int bound) {
  std::vector<Rational> out;
  for (int q = 1; q <= bound; ++q)
    for (int p = 0; p < q; ++p)
      if (std::gcd(p, q) == 1)
        out.push_back(make_rational(p, q));
  return out;
}

SweepReport sweep(SweepFormula formula, SweepOptions const &options) {
  if (options.max_denominator < 1)
    throw std::invalid_argument("max denominator must be at least 1");
  SweepReport report;
  report.formula = formula;
  report.max_denominator = options.max_denominator;
  report.random_max_denominator = options.random_max_denominator;
  report.seed = options.seed;

  auto check = [&](std::vector<RotationPair> gens) {
    Integer expected = core_order(gens);
    Integer got = formula == SweepFormula::Cyclic ? core_order_cyclic(gens[0])
                                                  : core_order_bicyclic(gens[0], gens[1]);
    if (got != expected)
      report.discrepancies.push_back({std::move(gens), got, expected});
  };

  auto fractions = reduced_fractions(options.max_denominator);
  std::vector<RotationPair> pairs;
  pairs.reserve(fractions.size() * fractions.size());
  for (auto const &a : fractions)
    for (auto const &b : fractions)
      pairs.emplace_back(a, b);

  if (formula == SweepFormula::Cyclic) {
    for (auto const &g : pairs)
      check({g});
    report.exhaustive_cases = pairs.size();
  } else {
    for (auto const &g1 : pairs)
      for (auto const &g2 : pairs)
        check({g1, g2});
    report.exhaustive_cases = pairs.size() * pairs.size();
  }

  if (options.random_cases > 0) {
    if (options.random_max_denominator < 1)
      throw std::invalid_argument("random max denominator must be at least 1");
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> den(1, options.random_max_denominator);
    auto fraction = [&] {
      int q = den(rng);
      int p = std::uniform_int_distribution<int>(0, q - 1)(rng);
      return make_rational(p, q);
    };
    auto rotation = [&] {
      Rational a = fraction();
      return RotationPair(a, fraction());
    };
    for (int i = 0; i < options.random_cases; ++i) {
      if (formula == SweepFormula::Cyclic) {
        check({rotation()});
      } else {
        RotationPair g1 = rotation();
        check({g1, rotation()});
      }
    }
    report.random_cases = static_cast<std::size_t>(options.random_cases);
  }
  return report;
}

} // namespace seifert
