#include "seifert/invariants.hpp"

#include <algorithm>
#include <cctype>

namespace seifert {

ParseError::ParseError(std::string const &what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class InvariantParser {
public:
  explicit InvariantParser(std::string_view text) : text_(text) {}

  SeifertInvariants parse() {
    SeifertInvariants m;
    expect('(');
    std::size_t genus_at = peek_position();
    m.genus = integer();
    if (m.genus < 0)
      throw ParseError("genus must be non-negative", genus_at);
    expect(',');
    m.orientation = orientation();
    expect('|');

    std::vector<SeifertPair> pairs;
    std::vector<std::size_t> pair_at;
    if (peek() == '(') {
      pair_at.push_back(peek_position());
      pairs.push_back(pair());
      while (peek() == ',') {
        ++pos_;
        pair_at.push_back(peek_position());
        pairs.push_back(pair());
      }
    }
    expect(')');
    if (peek() != '\0')
      throw ParseError("trailing characters", peek_position());

    for (std::size_t i = 0; i < pairs.size(); ++i) {
      auto const &[q, p] = pairs[i];
      if (q == 0)
        throw ParseError("fiber multiplicity q = 0", pair_at[i]);
      if (q < 0)
        throw ParseError("fiber multiplicity must be positive", pair_at[i]);
      if (gcd(q, p) != 1)
        throw InvalidInvariants("pair (" + to_string(q) + "," + to_string(p) +
                                ") is not coprime");
    }
    if (m.orientation == BaseOrientation::NonOrientable && m.genus == 0)
      throw InvalidInvariants("a non-orientable base needs genus >= 1");
    if (!pairs.empty() && pairs.back().q == 1) {
      m.b = pairs.back().p;
      pairs.pop_back();
    }
    m.pairs = std::move(pairs);
    return m;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::size_t peek_position() {
    skip_ws();
    return pos_;
  }

  void expect(char c) {
    if (peek() != c) {
      std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
      throw ParseError(std::string("expected '") + c + "', found " + found, pos_);
    }
    ++pos_;
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-')
      ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits)
      throw ParseError("expected integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  BaseOrientation orientation() {
    skip_ws();
    auto rest = text_.substr(pos_);
    if (rest.starts_with("o1")) {
      pos_ += 2;
      return BaseOrientation::Orientable;
    }
    if (rest.starts_with("n2")) {
      pos_ += 2;
      return BaseOrientation::NonOrientable;
    }
    throw ParseError("expected 'o1' or 'n2'", pos_);
  }

  SeifertPair pair() {
    expect('(');
    SeifertPair sp;
    sp.q = integer();
    expect(',');
    sp.p = integer();
    expect(')');
    return sp;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string cone_label(std::string const &surface, std::vector<Integer> cones) {
  std::sort(cones.begin(), cones.end());
  std::string s = surface;
  if (cones.empty())
    return s;
  s += '(';
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (i)
      s += ',';
    s += to_string(cones[i]);
  }
  return s + ')';
}

} // namespace

SeifertInvariants parse_invariants(std::string_view text) { return InvariantParser(text).parse(); }

std::string format_invariants(SeifertInvariants const &m) {
  std::string s = "(" + to_string(m.genus) + "," + to_string(m.orientation) + "|";
  for (auto const &[q, p] : m.pairs)
    s += "(" + to_string(q) + "," + to_string(p) + "),";
  return s + "(1," + to_string(m.b) + "))";
}

SeifertInvariants normalize(SeifertInvariants const &raw) {
  SeifertInvariants m{raw.genus, raw.orientation, {}, raw.b};
  for (auto const &[q, p] : raw.pairs) {
    if (q <= 0 || gcd(q, p) != 1)
      throw InvalidInvariants("invalid Seifert pair (" + to_string(q) + "," + to_string(p) + ")");
    m.b += floor_div(p, q);
    if (q > 1)
      m.pairs.push_back({q, mod_floor(p, q)});
  }
  return m;
}

bool is_normalized(SeifertInvariants const &m) {
  return std::all_of(m.pairs.begin(), m.pairs.end(),
                     [](SeifertPair const &sp) { return sp.q >= 2 && sp.p > 0 && sp.p < sp.q; });
}

Rational euler_class(SeifertInvariants const &m) {
  Rational sum(m.b);
  for (auto const &[q, p] : m.pairs)
    sum += make_rational(p, q);
  return -sum;
}

Rational orbifold_euler_characteristic(SeifertInvariants const &m) {
  Rational chi = m.orientation == BaseOrientation::Orientable ? Rational(2 - 2 * m.genus)
                                                              : Rational(2 - m.genus);
  for (auto const &[q, p] : m.pairs)
    chi -= 1 - make_rational(1, q);
  return chi;
}

BaseOrbifold base_orbifold(SeifertInvariants const &raw) {
  auto m = normalize(raw);
  BaseOrbifold base;
  if (m.orientation == BaseOrientation::Orientable && m.genus == 0) {
    base.underlying = Underlying::Sphere;
  } else if (m.orientation == BaseOrientation::NonOrientable && m.genus == 1) {
    base.underlying = Underlying::ProjectivePlane;
  } else if (m.orientation == BaseOrientation::NonOrientable && m.genus == 0) {
    throw InvalidInvariants("a non-orientable base needs genus >= 1");
  } else {
    throw OutOfScopeGeometry("base surface of genus " + to_string(m.genus) + " (" +
                             to_string(m.orientation) + ") is outside the classified geometries");
  }
  for (auto const &sp : m.pairs)
    base.cone_orders.push_back(sp.q);
  base.chi_orb = orbifold_euler_characteristic(m);
  return base;
}

GeometryVerdict geometry_verdict(SeifertInvariants const &raw) {
  auto m = normalize(raw);
  GeometryVerdict v;
  v.euler_class = euler_class(m);
  if (m.orientation == BaseOrientation::NonOrientable && m.genus == 0)
    throw InvalidInvariants("a non-orientable base needs genus >= 1");
  v.chi_orb = orbifold_euler_characteristic(m);

  std::vector<Integer> cones;
  for (auto const &sp : m.pairs)
    cones.push_back(sp.q);
  std::sort(cones.begin(), cones.end());

  bool sphere = m.orientation == BaseOrientation::Orientable && m.genus == 0;
  bool projective = m.orientation == BaseOrientation::NonOrientable && m.genus == 1;
  v.in_scope = sphere || projective;
  if (sphere)
    v.base_label = cone_label("S2", cones);
  else if (projective)
    v.base_label = cone_label("P2", cones);
  else
    v.base_label = cone_label(std::string(m.orientation == BaseOrientation::Orientable ? "F" : "N") +
                                  to_string(m.genus),
                              cones);

  if (v.chi_orb > 0) {
    if (projective) {
      v.shape = cones.empty() ? EllipticBase::ProjectivePlane : EllipticBase::ProjectiveCone;
    } else {
      switch (cones.size()) {
      case 0: v.shape = EllipticBase::Sphere; break;
      case 1: v.shape = EllipticBase::OneCone; break;
      case 2: v.shape = EllipticBase::TwoCones; break;
      default:
        // chi > 0 with three cones forces (2,2,q) or (2,3,q<=5).
        if (cones[1] == 2)
          v.shape = EllipticBase::Dihedral;
        else if (cones[2] == 3)
          v.shape = EllipticBase::Tetrahedral;
        else if (cones[2] == 4)
          v.shape = EllipticBase::Octahedral;
        else
          v.shape = EllipticBase::Icosahedral;
      }
    }
  }
  v.elliptic = v.chi_orb > 0 && v.euler_class != 0;
  return v;
}

std::string to_string(EllipticBase shape) {
  switch (shape) {
  case EllipticBase::Sphere: return "S2";
  case EllipticBase::OneCone: return "S2(q)";
  case EllipticBase::TwoCones: return "S2(q1,q2)";
  case EllipticBase::Dihedral: return "S2(2,2,q)";
  case EllipticBase::Tetrahedral: return "S2(2,3,3)";
  case EllipticBase::Octahedral: return "S2(2,3,4)";
  case EllipticBase::Icosahedral: return "S2(2,3,5)";
  case EllipticBase::ProjectiveCone: return "P2(q)";
  case EllipticBase::ProjectivePlane: return "P2";
  }
  return "?";
}

char const *to_string(Underlying u) {
  switch (u) {
  case Underlying::Sphere: return "S2";
  case Underlying::Disc: return "D";
  case Underlying::ProjectivePlane: return "P2";
  }
  return "?";
}

char const *to_string(BaseOrientation o) { return o == BaseOrientation::Orientable ? "o1" : "n2"; }

} // namespace seifert
