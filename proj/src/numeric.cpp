#include "seifert/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace seifert {

Integer gcd(Integer const &a, Integer const &b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(Integer const &a, Integer const &b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor_div(Integer const &a, Integer const &b) {
  if (b <= 0)
    throw std::domain_error("floor_div: divisor must be positive");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(Integer const &a, Integer const &b) {
  if (b <= 0)
    throw std::domain_error("mod_floor: modulus must be positive");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rational make_rational(Integer const &num, Integer const &den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational frac_part(Rational const &x) {
  Integer const &den = x.get_den();
  return make_rational(mod_floor(x.get_num(), den), den);
}

bool is_integral(Rational const &x) { return x.get_den() == 1; }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Integer parse_integer(std::string_view text) {
  auto s = trim(text);
  if (!is_decimal(s))
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  if (s.front() == '+')
    s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(s));
  auto den = parse_integer(s.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(s.substr(0, slash)), den);
}

std::string to_string(Integer const &x) { return x.get_str(); }

std::string to_string(Rational const &x) {
  if (x.get_den() == 1)
    return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::optional<std::int64_t> to_int64(Integer const &x) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!mpz_fits_slong_p(x.get_mpz_t()))
    return std::nullopt;
  return static_cast<std::int64_t>(x.get_si());
}

Integer inverse_residue_of_minus_one(Integer const &a, Integer const &m) {
  if (m <= 0)
    throw std::domain_error("modulus must be positive");
  if (m == 1)
    return 0;
  Integer inv;
  Integer a_mod = mod_floor(a, m);
  if (mpz_invert(inv.get_mpz_t(), a_mod.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("residue is not invertible");
  return mod_floor(-inv, m);
}

} // namespace seifert
