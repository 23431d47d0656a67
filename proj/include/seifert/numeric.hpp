#pragma once

// Exact integer and rational helpers on top of GMP.  Nothing in the library
// uses floating point.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace seifert {

using Integer = mpz_class;
using Rational = mpq_class;

Integer gcd(Integer const &a, Integer const &b);
Integer lcm(Integer const &a, Integer const &b);

/// Floor division and the matching non-negative remainder (divisor must be positive).
Integer floor_div(Integer const &a, Integer const &b);
Integer mod_floor(Integer const &a, Integer const &b);

/// Canonical num/den; throws std::domain_error on a zero denominator.
Rational make_rational(Integer const &num, Integer const &den);

/// Representative of x modulo 1 in [0, 1).
Rational frac_part(Rational const &x);

bool is_integral(Rational const &x);

/// Parses "p/q", "-p/q" or a plain integer.  Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string to_string(Integer const &x);
std::string to_string(Rational const &x);

std::optional<std::int64_t> to_int64(Integer const &x);

/// Least non-negative z with a*z == -1 (mod m); m == 1 gives 0.  Requires gcd(a, m) == 1.
Integer inverse_residue_of_minus_one(Integer const &a, Integer const &m);

} // namespace seifert
