#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vnat {

using Integer = mpz_class;
using Rational = mpq_class;

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Always "n/d", including d = 1. Used by the series text format.
std::string to_fraction_string(const Rational& q);

// Accepts "n", "-n", "n/d". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Generalized binomial coefficient C(m, i) for any integer m and i >= 0.
Integer binomial(std::int64_t m, std::int64_t i);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Integer& z);

// Floor and ceiling of a rational.
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

// Reduce e into [0, 1).
Rational frac_part(const Rational& e);

}  // namespace vnat
