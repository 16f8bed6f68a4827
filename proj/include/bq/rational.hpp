#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace bq {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& s);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

Rational rpow(const Rational& base, long exponent);
Integer ipow(const Integer& base, unsigned long exponent);

// max(|num|, den)
Integer naive_height(const Rational& q);

std::optional<Integer> integer_sqrt_exact(const Integer& n);
std::optional<Rational> rational_sqrt(const Rational& q);
bool is_rational_square(const Rational& q);
bool is_rational_fourth_power(const Rational& q);
bool is_rational_cube(const Rational& q);

Integer lcm_of_denominators(const std::vector<Rational>& v);
Integer gcd_of_numerators(const std::vector<Rational>& v);

}  // namespace bq
