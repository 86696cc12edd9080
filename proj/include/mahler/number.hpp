#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace mahler {

using Integer = mpz_class;
using Rational = mpq_class;  // kept canonical: gcd(num, den) = 1, den > 0

// Checked machine arithmetic for exponents and indices.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t checked_pow(int64_t b, int64_t k);

int64_t floor_div(int64_t a, int64_t b);
int64_t pos_mod(int64_t a, int64_t m);
int64_t gcd_i64(int64_t a, int64_t b);
int64_t lcm_i64(int64_t a, int64_t b);
int64_t inverse_mod(int64_t a, int64_t m);

int64_t to_i64(const Integer& z);
int64_t floor_i64(const Rational& q);
Rational make_rational(int64_t num, int64_t den = 1);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// Accepts "[+-]digits" or "[+-]digits/digits" in lowest terms with positive denominator.
// Throws Error(malformed_input) otherwise.
Rational parse_rational(const std::string& s);

}  // namespace mahler
