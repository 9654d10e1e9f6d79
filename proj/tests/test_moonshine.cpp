#include <random>

#include "doctest.h"
#include "vnat/moonshine.hpp"

using namespace vnat;
using namespace vnat::moonshine;
using qseries::FracQSeries;

namespace {

using Dense = std::vector<Integer>;

Dense mul(const Dense& a, const Dense& b) {
  Dense c(a.size(), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

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

Dense e4(std::size_t len) {
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

// q * J as a dense series: E4^3 / prod (1 - q^n)^24 - 744 q.
Dense j_oracle(std::size_t len) {
  const Dense e = e4(len);
  Dense out = mul(mul(mul(e, e), e), inverse(euler_power(len, 24)));
  out[1] -= 744;
  return out;
}

FracQSeries from_dense_shifted(const Dense& d) {
  FracQSeries::Coefficients c;
  for (std::size_t i = 0; i < d.size(); ++i) c[static_cast<std::int64_t>(i) - 1] = Rational(d[i]);
  return FracQSeries(1, static_cast<std::int64_t>(d.size()) - 1, c);
}

}  // namespace

TEST_CASE("assembled J equals E4^3 / Delta - 744") {
  for (std::int64_t prec : {3, 4, 8, 14}) {
    const FracQSeries j = assemble_j(prec);
    CHECK(j.valid_below() == prec - 1);
    CHECK(j == from_dense_shifted(j_oracle(static_cast<std::size_t>(prec))));
  }
  const auto detail = assemble_j_detailed(8);
  CHECK(detail.twisted_sign == 1);
  CHECK(detail.zero_constant_signs == std::vector<int>{1, -1});
  CHECK_THROWS_AS(assemble_j(2), std::invalid_argument);
}

TEST_CASE("character inputs") {
  const FracQSeries trace = involution_trace(6);
  CHECK(trace.coefficient(-1) == 1);
  CHECK(trace.coefficient(0) == -24);
  CHECK(trace.coefficient(1) == 276);
  CHECK(trace.coefficient(2) == -2048);
  CHECK(trace.coefficient(3) == 11202);
  const FracQSeries tw = twisted_character(6);
  CHECK(tw.valid_below() == 5);
  CHECK(tw.coefficient(make_rational(1, 2)) == 4096);
  CHECK(tw.coefficient(1) == 98304);
  const FracQSeries leech = leech_character(6);
  CHECK(leech.coefficient(0) == 24);
}

TEST_CASE("triality components against the dense oracle") {
  const std::size_t len = 10;
  // theta_N = E4^3 - 672 Delta; V00 = (theta_N / eta^24 + 3 eta(t)^24 / eta(2t)^24) / 4.
  const Dense e = e4(len);
  Dense theta = mul(mul(e, e), e);
  const Dense delta_over_q = euler_power(len, 24);
  for (std::size_t n = 1; n < len; ++n) theta[n] -= 672 * delta_over_q[n - 1];
  const Dense untwisted = mul(theta, inverse(delta_over_q));
  const Dense trace = mul(euler_power(len, 24), inverse(euler_power(len, 24, 2)));
  Dense v00(len);
  for (std::size_t n = 0; n < len; ++n) {
    const Integer s = untwisted[n] + 3 * trace[n];
    REQUIRE(s % 4 == 0);
    v00[n] = s / 4;
  }
  const auto b = triality_components(static_cast<std::int64_t>(len));
  CHECK(b.v00 == from_dense_shifted(v00));
  CHECK(b.v00.coefficient(-1) == 1);
  CHECK(b.v00.coefficient(0) == 0);
  CHECK(b.v00.coefficient(1) == 49428);
  CHECK(b.v01.coefficient(-1) == 0);
  CHECK(b.v01.coefficient(1) == 49152);
  CHECK(b.v00 + b.v01 + b.v10 + b.v11 == b.j);
  CHECK(b.v00.coefficient(1) + 3 * b.v01.coefficient(1) == 196884);
}

TEST_CASE("Faber polynomials of J") {
  const FracQSeries j = assemble_j(10);
  CHECK(faber_polynomial(j, 1) == std::vector<Rational>{0, 1});
  CHECK(faber_polynomial(j, 2) == std::vector<Rational>{-2 * 196884, 0, 1});
  CHECK(faber_polynomial(j, 3) == std::vector<Rational>{-3 * 21493760, -3 * 196884, 0, 1});
  CHECK_THROWS_AS(faber_polynomial(j + FracQSeries::monomial(1, -2, j.valid_below()), 2), std::invalid_argument);
  CHECK_THROWS_AS(faber_polynomial(assemble_j(3), 4), std::invalid_argument);
}

TEST_CASE("Faber polynomial property on random series") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> v(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> coeffs;
    for (int i = 0; i < 10; ++i) coeffs.push_back(make_rational(v(rng), 1 + trial % 3));
    const FracQSeries f = FracQSeries::monomial(1, -1, 9) + FracQSeries::polynomial(coeffs, 9);
    for (int k = 1; k <= 5; ++k) {
      const FracQSeries p = evaluate_polynomial(faber_polynomial(f, k), f);
      CHECK(p.coefficient(-k) == 1);
      for (int e = -k + 1; e <= 0; ++e) CHECK(p.coefficient(e) == 0);
    }
  }
}

TEST_CASE("J is completely replicable") {
  const auto verdicts = check_completely_replicable(j_family(12), 6, 12);
  REQUIRE(verdicts.size() == 6);
  for (const auto& v : verdicts) {
    CHECK(v.pass);
    CHECK_FALSE(v.first_discrepancy.has_value());
    CHECK(v.compared_below > 1);
  }
  CHECK_THROWS_AS(check_completely_replicable(j_family(4), 6, 4), std::invalid_argument);
}

TEST_CASE("injected fault is localized") {
  const FracQSeries j = assemble_j(12);
  const ReplicableFamily bad(2, {j, j + FracQSeries::monomial(1, 1, j.valid_below())});
  const auto verdicts = check_completely_replicable(bad, 4, 12);
  CHECK(verdicts[0].pass);
  REQUIRE_FALSE(verdicts[1].pass);
  REQUIRE(verdicts[1].first_discrepancy.has_value());
  CHECK(verdicts[1].first_discrepancy->exponent == 2);
  CHECK(verdicts[1].first_discrepancy->actual - verdicts[1].first_discrepancy->expected == 1);
}

TEST_CASE("order-2 family needs the constant shift") {
  const auto shifted = check_completely_replicable(order2_family(12, 24), 6, 12);
  for (const auto& v : shifted) CHECK(v.pass);
  const auto plain = check_completely_replicable(order2_family(12, 0), 6, 12);
  REQUIRE_FALSE(plain[0].pass);
  CHECK(plain[0].first_discrepancy->exponent == 0);
}

TEST_CASE("Hecke sums") {
  const FracQSeries j = assemble_j(12);
  const ReplicableFamily fam(1, {j});
  CHECK(&fam.at(5) == &fam.at(1));
  const FracQSeries h2 = hecke_sum(fam, 2);
  // J(2t) + 2 * (even part of J)(t/2): q^-2 + 2 c_2 q + c_1 q^2 + ...
  CHECK(h2.coefficient(-2) == 1);
  CHECK(h2.coefficient(0) == 0);
  CHECK(h2.coefficient(1) == 2 * j.coefficient(2));
  CHECK(h2.coefficient(2) == j.coefficient(1) + 2 * j.coefficient(4));
  CHECK(h2.valid_below() == 6);

  const ReplicableFamily fractional(1, {FracQSeries::monomial(1, -1, 3) + FracQSeries::monomial(1, make_rational(1, 2), 3)});
  CHECK_THROWS_AS(hecke_sum(fractional, 1), FamilyInconsistent);
  CHECK_THROWS_AS(ReplicableFamily(2, {j}), std::invalid_argument);
  CHECK_THROWS_AS(fam.at(0), std::invalid_argument);
}

TEST_CASE("family text format") {
  const ReplicableFamily fam = order2_family(8, 24);
  const std::string text = to_text(fam, 5);
  const FamilyFile back = parse_family(text);
  CHECK(back.kmax == 5);
  CHECK(back.family.order() == 2);
  CHECK(back.family.series() == fam.series());
  CHECK_THROWS_AS(parse_family("2 3 1\n\n1 2\n-1 1/1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("1 3 2\n\n1 4\n-1 1/1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family("1 3\n\n1 4\n-1 1/1\n"), std::invalid_argument);
}
