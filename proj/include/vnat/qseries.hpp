#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vnat/rational.hpp"

namespace vnat::qseries {

class DenominatorOverflow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a coefficient beyond the known truncation is requested.
class BeyondTruncation : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr std::int64_t kDefaultMaxDenominator = 48;

// Exponent denominators above this bound are rejected. Process-wide, thread-safe.
std::int64_t max_denominator();
void set_max_denominator(std::int64_t n);

// A truncated series sum_k c_k q^(k/N), known exactly for k < trunc and unknown
// from there on. Zero coefficients are never stored.
class FracQSeries {
 public:
  using Coefficients = std::map<std::int64_t, Rational>;

  FracQSeries(std::int64_t denom, std::int64_t trunc);
  FracQSeries(std::int64_t denom, std::int64_t trunc, Coefficients coeffs);

  // c q^e + O(q^valid_below).
  static FracQSeries monomial(const Rational& c, const Rational& e, const Rational& valid_below);
  // sum c_i q^i for the given integer-exponent coefficients, known below q^valid_below.
  static FracQSeries polynomial(const std::vector<Rational>& coeffs, std::int64_t valid_below);

  std::int64_t denom() const { return denom_; }
  std::int64_t trunc() const { return trunc_; }
  const Coefficients& coeffs() const { return coeffs_; }

  // Exponent bound below which the series is known: trunc / denom.
  Rational valid_below() const;
  bool is_known(const Rational& exponent) const;
  // Coefficient of q^exponent; throws BeyondTruncation when it is not known.
  Rational coefficient(const Rational& exponent) const;
  Rational coefficient(std::int64_t integer_exponent) const;

  // Smallest exponent with a nonzero coefficient, if any is known.
  std::optional<Rational> leading_exponent() const;

  // Same series re-expressed over a multiple of the current denominator.
  FracQSeries with_denominator(std::int64_t n) const;
  // Drops everything at or beyond exponent `bound` (which must not exceed valid_below()).
  FracQSeries truncated(const Rational& bound) const;
  // Only the terms with integral exponents; the truncation point is unchanged.
  FracQSeries integral_part() const;

  bool all_integral() const;

  // Semantic equality: same truncation point and the same known coefficients.
  friend bool operator==(const FracQSeries& a, const FracQSeries& b);

 private:
  void prune_and_check();

  std::int64_t denom_;
  std::int64_t trunc_;
  Coefficients coeffs_;
};

FracQSeries operator+(const FracQSeries& a, const FracQSeries& b);
FracQSeries operator-(const FracQSeries& a, const FracQSeries& b);
FracQSeries operator-(const FracQSeries& a);
FracQSeries operator*(const FracQSeries& a, const FracQSeries& b);
FracQSeries operator*(const Rational& c, const FracQSeries& a);

FracQSeries invert(const FracQSeries& a);
FracQSeries pow(const FracQSeries& a, std::int64_t n);
// q -> q^m, i.e. tau -> m tau.
FracQSeries rescale_q(const FracQSeries& a, const Rational& m);

struct EtaFactor {
  Rational m;      // positive integer or half-integer
  std::int64_t r;  // exponent
};

// prod eta(m tau)^r, known for prec integral steps beyond its leading exponent.
FracQSeries eta_quotient(const std::vector<EtaFactor>& spec, std::int64_t prec);

// 1 + 240 sum sigma_3(n) q^n, known below q^prec.
FracQSeries eisenstein_e4(std::int64_t prec);
// q prod (1 - q^n)^24, known below q^(1 + prec).
FracQSeries discriminant_delta(std::int64_t prec);
// c0 E4^3 + (c1 - 720 c0) Delta, known below q^prec.
FracQSeries weight12_match(const Rational& c0, const Rational& c1, std::int64_t prec);
// theta / eta^d, known as far as theta allows.
FracQSeries char_lattice_voa(const FracQSeries& theta, std::int64_t d);

// "denom trunc" then "k num/den" lines sorted by k.
std::string to_text(const FracQSeries& s);
FracQSeries parse_series(std::string_view text);

// Human-readable terms "coeff q^(e)" with reduced exponents, plus the O(...) bound.
std::string to_display(const FracQSeries& s);

// Sum of d^3 over the divisors of n.
Integer sigma3(std::int64_t n);

}  // namespace vnat::qseries
