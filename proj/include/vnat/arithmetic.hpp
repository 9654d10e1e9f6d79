#pragma once

#include <map>
#include <string>
#include <vector>

#include "vnat/rational.hpp"

namespace vnat::arithmetic {

// prime -> exponent
using Factorization = std::map<unsigned long, unsigned long>;

// Trial division; throws if a cofactor above the search limit remains.
Factorization factorize(const Integer& n, unsigned long limit = 1000000);
Integer expand(const Factorization& f);
std::string to_string(const Factorization& f);

const std::vector<unsigned long>& supersingular_primes();

// 2^46 3^20 5^9 7^6 11 13^3 23 29 31 41 47 59 71.
const Factorization& monster_order_bound_exponents();
Integer monster_order_bound();

// 2^21 3^9 5^4 7^2 11 13 23.
const Factorization& co1_order_exponents();

struct Fact {
  std::string name;
  std::string statement;
  std::string expected;
  std::string actual;
  bool holds = false;
};

// Exact integer identities about the dimension 196883 and related counts.
std::vector<Fact> arithmetic_facts();

struct OrderBoundReport {
  Factorization factorization;  // re-derived from the expanded product
  bool primes_are_supersingular = false;
  bool small_prime_valuations_match = false;  // 2^46, 3^20, 5^9, 7^6, 13^3
  std::vector<unsigned long> supersingular_not_dividing;  // 17 and 19
};

OrderBoundReport check_order_bound();

}  // namespace vnat::arithmetic
