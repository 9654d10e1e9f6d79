#include <map>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "vnat/codes.hpp"
#include "vnat/rational.hpp"

using namespace vnat;
using namespace vnat::codes;

namespace {

// Weight distribution from all 2^k subsets of the generator rows, summed directly.
std::map<int, std::uint64_t> brute_force_enumerator(const BinaryCode& c) {
  std::map<int, std::uint64_t> out;
  const auto& g = c.generators();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
    Word w = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if ((mask >> i) & 1) w ^= g[i];
    }
    ++out[weight(w)];
  }
  return out;
}

// Krawtchouk polynomial K_k(x) for length n.
Integer krawtchouk(int n, int k, int x) {
  Integer s = 0;
  for (int j = 0; j <= k; ++j) {
    const Integer term = binomial(x, j) * binomial(n - x, k - j);
    s += (j % 2 ? -term : term);
  }
  return s;
}

BinaryCode random_code(std::mt19937_64& rng, int n, int k) {
  std::uniform_int_distribution<Word> word(0, (Word{1} << n) - 1);
  std::vector<Word> ws;
  for (int i = 0; i < k; ++i) ws.push_back(word(rng));
  return BinaryCode(n, ws);
}

}  // namespace

TEST_CASE("Golay code certification") {
  const auto g = golay_construction();
  const BinaryCode& c = g.code;
  CHECK(c.length() == 24);
  CHECK(c.dimension() == 12);
  CHECK(min_weight(c) == 8);
  CHECK(is_doubly_even(c));
  CHECK(is_self_dual(c));
  const WeightEnumerator expected{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  CHECK(weight_enumerator(c) == expected);
  CHECK(brute_force_enumerator(c) == std::map<int, std::uint64_t>(expected.begin(), expected.end()));
  CHECK((g.completion == "zero" || g.completion == "infinity"));
  CHECK(golay_code() == c);
}

TEST_CASE("Golay code is stable under t -> t + 1 and t -> -1/t") {
  const BinaryCode c = golay_code();
  for (Word w : c.generators()) {
    Word shifted = 0;
    Word inverted = 0;
    for (int x = 0; x < 24; ++x) {
      if (!((w >> x) & 1)) continue;
      shifted |= Word{1} << moebius23(1, 1, 0, 1, x);
      inverted |= Word{1} << moebius23(0, -1, 1, 0, x);
    }
    CHECK(c.contains(shifted));
    CHECK(c.contains(inverted));
  }
}

TEST_CASE("moebius23 handles the point at infinity") {
  CHECK(moebius23(1, 1, 0, 1, kInfinity) == kInfinity);
  CHECK(moebius23(0, -1, 1, 0, 0) == kInfinity);
  CHECK(moebius23(0, -1, 1, 0, kInfinity) == 0);
  CHECK(moebius23(0, -1, 1, 0, 1) == 22);
}

TEST_CASE("generator form is canonical") {
  const BinaryCode a(6, {0b000111, 0b111000, 0b111111});
  const BinaryCode b(6, {0b111000, 0b000111});
  CHECK(a == b);
  CHECK(a.dimension() == 2);
  CHECK(BinaryCode::zero(5).dimension() == 0);
  CHECK_THROWS_AS(BinaryCode(4, {0b10000}), std::invalid_argument);
}

TEST_CASE("MacWilliams identity on random codes") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 11;
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const BinaryCode c = random_code(rng, n, k);
    const BinaryCode d = dual_code(c);
    CHECK(c.dimension() + d.dimension() == n);
    CHECK(dual_code(d) == c);
    const auto we = weight_enumerator(c);
    CHECK(brute_force_enumerator(c) == std::map<int, std::uint64_t>(we.begin(), we.end()));
    const auto wd = weight_enumerator(d);
    for (int j = 0; j <= n; ++j) {
      Integer sum = 0;
      for (const auto& [w, cnt] : we) sum += Integer(static_cast<unsigned long>(cnt)) * krawtchouk(n, j, w);
      const Integer size = Integer(1) << static_cast<unsigned>(c.dimension());
      CHECK(sum % size == 0);
      const auto it = wd.find(j);
      CHECK(sum / size == (it == wd.end() ? Integer(0) : Integer(static_cast<unsigned long>(it->second))));
    }
    for (Word w : c.generators()) {
      for (Word v : d.generators()) CHECK(weight(w & v) % 2 == 0);
    }
  }
}

TEST_CASE("min weight and doubly even on small codes") {
  const BinaryCode hamming(7, {0b1010101, 0b0110011, 0b0001111, 0b1110000});
  CHECK(hamming.dimension() == 4);
  CHECK(min_weight(hamming) == 3);
  CHECK_FALSE(is_doubly_even(hamming));
  const BinaryCode extended(8, {0b01010101, 0b00110011, 0b00001111, 0b11110000});
  CHECK(is_doubly_even(extended));
  CHECK(is_self_dual(extended));
  CHECK(min_weight(extended) == 4);
}

TEST_CASE("text round trip") {
  const BinaryCode c = golay_code();
  CHECK(parse_code(to_text(c)) == c);
  CHECK_THROWS_AS(parse_code("3 1\n0102\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_code(""), std::invalid_argument);
}
