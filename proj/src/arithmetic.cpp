#include "vnat/arithmetic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vnat::arithmetic {

Factorization factorize(const Integer& n, unsigned long limit) {
  if (n <= 0) throw std::invalid_argument("can only factor positive integers");
  Factorization f;
  Integer rest = n;
  for (unsigned long p = 2; p <= limit && rest > 1; ++p) {
    if (Integer(p) * Integer(p) > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++f[p];
    }
  }
  if (rest > 1) {
    if (Integer(limit) * Integer(limit) < rest) {
      throw std::invalid_argument("cofactor " + rest.get_str() + " is beyond the trial division limit");
    }
    ++f[rest.get_ui()];
  }
  return f;
}

Integer expand(const Factorization& f) {
  Integer out = 1;
  for (const auto& [p, e] : f) {
    Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    out *= pe;
  }
  return out;
}

std::string to_string(const Factorization& f) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, e] : f) {
    out << (first ? "" : " * ") << p;
    if (e != 1) out << "^" << e;
    first = false;
  }
  return out.str();
}

const std::vector<unsigned long>& supersingular_primes() {
  static const std::vector<unsigned long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 41, 47, 59, 71};
  return primes;
}

const Factorization& monster_order_bound_exponents() {
  static const Factorization f{{2, 46}, {3, 20}, {5, 9},  {7, 6},  {11, 1}, {13, 3}, {23, 1},
                               {29, 1}, {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}};
  return f;
}

Integer monster_order_bound() { return expand(monster_order_bound_exponents()); }

const Factorization& co1_order_exponents() {
  static const Factorization f{{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}};
  return f;
}

std::vector<Fact> arithmetic_facts() {
  std::vector<Fact> facts;
  auto add = [&](std::string name, std::string statement, const Integer& expected, const Integer& actual) {
    facts.push_back({std::move(name), std::move(statement), expected.get_str(), actual.get_str(), expected == actual});
  };
  add("196883-factorization", "47 * 59 * 71 = 196883", 196883, Integer(47) * 59 * 71);
  {
    const Factorization f = factorize(196883);
    facts.push_back({"196883-prime-factors", "196883 has prime factorization 47 * 59 * 71", "47 * 59 * 71",
                     to_string(f), to_string(f) == "47 * 59 * 71"});
  }
  add("weight-two-decomposition", "299 + 98280 + 24 * 2^12 = 196883", 196883,
      Integer(299) + 98280 + Integer(24) * 4096);
  add("symmetric-square-dimension", "dim Sym^2 of a 24-dim space minus 1 = 299", 299, Integer(24 * 25 / 2 - 1));
  add("leech-pairs", "196560 / 2 = 98280", 98280, Integer(196560) / 2);
  add("twisted-weight-two", "24 * 2^12 = 98304", 98304, Integer(24) * 4096);
  add("j-coefficient", "196883 + 1 = 196884", 196884, Integer(196883) + 1);
  add("co1-order", "2^21 3^9 5^4 7^2 11 13 23 = 4157776806543360000", Integer("4157776806543360000"),
      expand(co1_order_exponents()));
  return facts;
}

OrderBoundReport check_order_bound() {
  OrderBoundReport report;
  report.factorization = factorize(monster_order_bound());
  const auto& ss = supersingular_primes();
  report.primes_are_supersingular = std::all_of(report.factorization.begin(), report.factorization.end(),
                                                [&](const auto& kv) {
                                                  return std::find(ss.begin(), ss.end(), kv.first) != ss.end();
                                                });
  const Factorization small{{2, 46}, {3, 20}, {5, 9}, {7, 6}, {13, 3}};
  report.small_prime_valuations_match = std::all_of(small.begin(), small.end(), [&](const auto& kv) {
    auto it = report.factorization.find(kv.first);
    return it != report.factorization.end() && it->second == kv.second;
  });
  for (auto p : ss) {
    if (!report.factorization.count(p)) report.supersingular_not_dividing.push_back(p);
  }
  return report;
}

}  // namespace vnat::arithmetic
