#include "seifert/rotation.hpp"

#include <stdexcept>

namespace seifert {

RotationPair::RotationPair(Rational a, Rational b)
    : alpha(frac_part(a)), beta(frac_part(b)) {}

Integer RotationPair::order() const { return lcm(alpha.get_den(), beta.get_den()); }

RotationPair parse_rotation(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t')
      s += c;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw std::invalid_argument("rotation pair must look like 'a/b,c/d': '" + std::string(text) + "'");
  return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

std::string to_string(RotationPair const &r) {
  return "(" + to_string(r.alpha) + "," + to_string(r.beta) + ")";
}

RotationPair transform(Mat2 const &m, RotationPair const &r) {
  return {m(0, 0) * r.alpha + m(0, 1) * r.beta, m(1, 0) * r.alpha + m(1, 1) * r.beta};
}

RotationPair transform_inverse(Mat2 const &m, RotationPair const &r) {
  Integer det = m.det();
  if (det != 1 && det != -1)
    throw NonUnimodular("filling " + to_string(m) + " has determinant " + to_string(det));
  // The inverse of a unimodular matrix is det * adjugate.
  Mat2 inv(det * m(1, 1), -det * m(0, 1), -det * m(1, 0), det * m(0, 0));
  return transform(inv, r);
}

RotationPair flip_second(RotationPair const &r) { return {r.alpha, -r.beta}; }

} // namespace seifert
