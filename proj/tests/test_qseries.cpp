#include <random>

#include "doctest.h"
#include "vnat/qseries.hpp"

using namespace vnat;
using namespace vnat::qseries;

namespace {

// Dense integer power series truncated to L terms, used as an oracle.
using Dense = std::vector<Integer>;

Dense mul(const Dense& a, const Dense& b) {
  Dense c(a.size(), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// prod_{n >= 1} (1 - q^(step n))^power, by repeated multiplication with binomials.
Dense euler_power(std::size_t len, int power, std::size_t step = 1) {
  Dense out(len, Integer(0));
  out[0] = 1;
  for (std::size_t n = step; n < len; n += step) {
    for (int rep = 0; rep < power; ++rep) {
      for (std::size_t k = len - 1; k >= n; --k) out[k] -= out[k - n];
    }
  }
  return out;
}

// 1 / p for p with constant term 1.
Dense inverse(const Dense& p) {
  Dense out(p.size(), Integer(0));
  out[0] = 1;
  for (std::size_t n = 1; n < p.size(); ++n) {
    Integer s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += p[k] * out[n - k];
    out[n] = -s;
  }
  return out;
}

Dense e4_dense(std::size_t len) {
  Dense e(len, Integer(0));
  e[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    Integer s = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) s += Integer(static_cast<unsigned long>(d * d * d));
    }
    e[n] = 240 * s;
  }
  return e;
}

FracQSeries random_series(std::mt19937_64& rng, std::int64_t denom) {
  std::uniform_int_distribution<std::int64_t> lead(-3 * denom, 2 * denom);
  std::uniform_int_distribution<std::int64_t> len(1, 6 * denom);
  std::uniform_int_distribution<std::int64_t> val(-5, 5);
  const std::int64_t l = lead(rng);
  const std::int64_t t = l + len(rng);
  FracQSeries::Coefficients c;
  c[l] = Rational(static_cast<long>(val(rng) | 1));
  for (std::int64_t k = l + 1; k < t; ++k) {
    const auto v = val(rng);
    if (v) c[k] = Rational(static_cast<long>(v));
  }
  return FracQSeries(denom, t, c);
}

}  // namespace

TEST_CASE("discriminant matches the naive product") {
  const std::size_t len = 30;
  const Dense prod = euler_power(len, 24);
  const FracQSeries delta = discriminant_delta(static_cast<std::int64_t>(len));
  CHECK(delta.valid_below() == static_cast<long>(len + 1));
  for (std::size_t n = 0; n < len; ++n) CHECK(delta.coefficient(static_cast<std::int64_t>(n + 1)) == prod[n]);
  CHECK(delta.coefficient(2) == -24);
  CHECK(delta.coefficient(3) == 252);
  CHECK(delta.coefficient(12) == -370944);
}

TEST_CASE("E4 and sigma3") {
  const Dense e = e4_dense(25);
  const FracQSeries s = eisenstein_e4(25);
  for (std::size_t n = 0; n < 25; ++n) CHECK(s.coefficient(static_cast<std::int64_t>(n)) == e[n]);
  CHECK(sigma3(1) == 1);
  CHECK(sigma3(6) == 1 + 8 + 27 + 216);
}

TEST_CASE("J = E4^3 / Delta - 744 against the dense oracle") {
  const std::size_t len = 14;
  const Dense e4 = e4_dense(len);
  const Dense j_times_q = mul(mul(mul(e4, e4), e4), inverse(euler_power(len, 24)));
  CHECK(j_times_q[0] == 1);
  CHECK(j_times_q[1] == 744);
  CHECK(j_times_q[2] == 196884);
  CHECK(j_times_q[3] == 21493760);
  const FracQSeries e4s = eisenstein_e4(static_cast<std::int64_t>(len));
  const FracQSeries j = pow(e4s, 3) * invert(discriminant_delta(static_cast<std::int64_t>(len)));
  for (std::size_t n = 0; n + 1 < len; ++n) CHECK(j.coefficient(static_cast<std::int64_t>(n) - 1) == j_times_q[n]);
}

TEST_CASE("weight-12 forms") {
  const FracQSeries w = weight12_match(1, 48, 4);
  CHECK(w.coefficient(0) == 1);
  CHECK(w.coefficient(1) == 48);
  CHECK(w.coefficient(2) == 195408);
  CHECK(w.coefficient(3) == 16785216);
  const FracQSeries leech = weight12_match(1, 0, 4);
  CHECK(leech.coefficient(1) == 0);
  CHECK(leech.coefficient(2) == 196560);
  CHECK(leech.coefficient(3) == 16773120);
  CHECK(w.valid_below() == 4);
}

TEST_CASE("eta quotients against naive products") {
  const std::int64_t prec = 16;
  // eta(t)^24 / eta(2t)^24 = q^-1 prod (1 - q^n)^24 / (1 - q^2n)^24.
  const Dense num = euler_power(static_cast<std::size_t>(prec), 24);
  const Dense den = euler_power(static_cast<std::size_t>(prec), 24, 2);
  const Dense ratio = mul(num, inverse(den));
  const FracQSeries t = eta_quotient({{1, 24}, {2, -24}}, prec);
  CHECK(t.valid_below() == prec - 1);
  for (std::int64_t n = 0; n < prec; ++n) CHECK(t.coefficient(n - 1) == ratio[static_cast<std::size_t>(n)]);

  // eta(t)^24 / eta(t/2)^24 in x = q^(1/2): x prod (1 - x^2n)^24 / (1 - x^n)^24.
  const Dense num2 = euler_power(static_cast<std::size_t>(2 * prec), 24, 2);
  const Dense den2 = euler_power(static_cast<std::size_t>(2 * prec), 24);
  const Dense ratio2 = mul(num2, inverse(den2));
  const FracQSeries u = eta_quotient({{1, 24}, {make_rational(1, 2), -24}}, prec);
  CHECK(u.denom() == 2);
  for (std::int64_t n = 0; n < 2 * prec; ++n) {
    const Rational e = make_rational(n + 1, 2);
    if (!u.is_known(e)) break;
    CHECK(u.coefficient(e) == ratio2[static_cast<std::size_t>(n)]);
  }
  CHECK(u.coefficient(make_rational(1, 2)) == 1);
  CHECK(u.coefficient(1) == 24);

  CHECK_THROWS_AS(eta_quotient({{make_rational(1, 3), 1}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(eta_quotient({{1, 1}}, 0), std::invalid_argument);
}

TEST_CASE("multiplication follows the truncation rule and the convolution") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t denom = 1 + trial % 3;
    const FracQSeries a = random_series(rng, denom);
    const FracQSeries b = random_series(rng, denom);
    const FracQSeries c = a * b;
    const Rational la = *a.leading_exponent();
    const Rational lb = *b.leading_exponent();
    CHECK(c.valid_below() == std::min(a.valid_below() + lb, b.valid_below() + la));
    // Coefficients on the known range agree with the plain convolution.
    std::map<std::int64_t, Rational> conv;
    for (const auto& [i, x] : a.coeffs()) {
      for (const auto& [j, y] : b.coeffs()) conv[i + j] += x * y;
    }
    for (const auto& [k, v] : conv) {
      const Rational e = make_rational(k, denom);
      if (c.is_known(e)) CHECK(c.coefficient(e) == v);
    }
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a.truncated(std::min(a.valid_below(), b.valid_below())));
  }
}

TEST_CASE("inverse, powers and rescaling") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t denom = 1 + trial % 2;
    const FracQSeries a = random_series(rng, denom);
    const FracQSeries inv = invert(a);
    const Rational l = *a.leading_exponent();
    CHECK(inv.valid_below() == a.valid_below() - 2 * l);
    const FracQSeries one = a * inv;
    CHECK(one.coefficient(0) == 1);
    for (const auto& [k, v] : one.coeffs()) {
      if (k != 0) CHECK(v == 0);
    }
    const FracQSeries cube = pow(a, 3);
    CHECK(cube == a * a * a);
    CHECK(pow(a, -2) == inv * inv);
    CHECK(pow(a, 1) == a);
    const FracQSeries r = rescale_q(a, 3);
    for (const auto& [k, v] : a.coeffs()) CHECK(r.coefficient(make_rational(3 * k, denom)) == v);
    CHECK(r.valid_below() == 3 * a.valid_below());
  }
  const FracQSeries x = FracQSeries::polynomial({1, 2, 3}, 5);
  CHECK(pow(x, 0).coefficient(0) == 1);
  CHECK(pow(x, 0).valid_below() == 5);
  CHECK_THROWS_AS(invert(FracQSeries(1, 4)), std::domain_error);
}

TEST_CASE("truncation is never exceeded") {
  const FracQSeries a = FracQSeries::polynomial({1, 1}, 3);
  CHECK(a.coefficient(2) == 0);
  CHECK_THROWS_AS(a.coefficient(3), BeyondTruncation);
  CHECK_THROWS_AS(a.truncated(4), BeyondTruncation);
  CHECK(FracQSeries(1, 2, {{2, 1}, {1, 0}}).coeffs().empty());
  const FracQSeries b = a * FracQSeries::monomial(1, -1, 1);
  CHECK(b.valid_below() == 1);
}

TEST_CASE("denominator limit") {
  CHECK(max_denominator() == kDefaultMaxDenominator);
  CHECK_NOTHROW(FracQSeries::monomial(1, make_rational(1, 48), 1));
  CHECK_THROWS_AS(FracQSeries::monomial(1, make_rational(1, 49), 1), DenominatorOverflow);
  const FracQSeries a = FracQSeries::monomial(1, make_rational(1, 16), 1);
  const FracQSeries b = FracQSeries::monomial(1, make_rational(1, 3), 1);
  CHECK((a * b).denom() == 48);
  const FracQSeries c = FracQSeries::monomial(1, make_rational(1, 5), 1);
  CHECK_THROWS_AS(a * c, DenominatorOverflow);
}

TEST_CASE("text and display formats") {
  const FracQSeries t = eta_quotient({{1, 24}, {make_rational(1, 2), -24}}, 3);
  CHECK(parse_series(to_text(t)) == t);
  CHECK(to_text(FracQSeries::polynomial({0, make_rational(-1, 2)}, 3)) == "1 3\n1 -1/2\n");
  CHECK(to_display(eta_quotient({{1, 24}, {2, -24}}, 3)) == "q^-1 - 24 + 276*q + O(q^2)");
  CHECK(to_display(t).rfind("q^(1/2) + 24*q + 300*q^(3/2)", 0) == 0);
  CHECK_THROWS_AS(parse_series("1 3\n2 1/1\n1 1/1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_series("1 3\n3 1/1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_series("0 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_series("1 3\n1\n"), std::invalid_argument);
}

TEST_CASE("lattice VOA characters") {
  const FracQSeries leech = char_lattice_voa(weight12_match(1, 0, 6), 24);
  CHECK(leech.coefficient(-1) == 1);
  CHECK(leech.coefficient(0) == 24);
  CHECK(leech.coefficient(1) == 196884);
  CHECK_THROWS_AS(char_lattice_voa(FracQSeries::polynomial({2}, 3), 24), std::invalid_argument);
}
