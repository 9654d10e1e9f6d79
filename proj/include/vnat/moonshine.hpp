#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vnat/qseries.hpp"

namespace vnat::moonshine {

using qseries::FracQSeries;

// theta_Leech / eta^24, from the weight-12 form with q-coefficient 0. Known below q^(prec - 1).
FracQSeries leech_character(std::int64_t prec);
// eta(tau)^24 / eta(2 tau)^24, known below q^(prec - 1).
FracQSeries involution_trace(std::int64_t prec);
// 2^12 eta(tau)^24 / eta(tau/2)^24, known below q^(prec - 1).
FracQSeries twisted_character(std::int64_t prec);

struct JAssembly {
  FracQSeries j;
  // Sign applied to the integral-exponent part of the twisted character.
  int twisted_sign = 1;
  // Signs whose sum has zero constant term, before the coefficient-sign tie-break.
  std::vector<int> zero_constant_signs;
};

// J = (leech_character + involution_trace) / 2 + sign * (integral part of the
// twisted character), known below q^(prec - 1). The sign must make the q^0
// coefficient vanish; if both signs do, the one giving nonnegative coefficients is
// taken, decided at precision at least 4. Throws if no unique sign remains.
JAssembly assemble_j_detailed(std::int64_t prec);
FracQSeries assemble_j(std::int64_t prec);

struct CharacterBundle {
  FracQSeries leech;
  FracQSeries involution_trace;
  FracQSeries twisted;
  FracQSeries v00;
  FracQSeries v01;
  FracQSeries v10;
  FracQSeries v11;
  FracQSeries j;
};

// V00 = (theta_N / eta^24 + 3 eta(tau)^24 / eta(2 tau)^24) / 4 with N = N(A1^24) and
// V01 = V10 = V11 = (J - V00) / 3. Throws if a component is not a series of
// nonnegative integers.
CharacterBundle triality_components(std::int64_t prec);

// Coefficients c_0..c_k with sum c_j f^j = q^-k + O(q), for f = q^-1 + O(1).
std::vector<Rational> faber_polynomial(const FracQSeries& f, int k);
FracQSeries evaluate_polynomial(const std::vector<Rational>& coeffs, const FracQSeries& f);

// T_{g^a} for a = 1..order; exponents beyond the order wrap around.
class ReplicableFamily {
 public:
  ReplicableFamily(int order, std::vector<FracQSeries> series);

  int order() const { return order_; }
  const std::vector<FracQSeries>& series() const { return series_; }
  // T_{g^a} for any a >= 1.
  const FracQSeries& at(int a) const;

 private:
  int order_;
  std::vector<FracQSeries> series_;
};

class FamilyInconsistent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// sum over ad = k, 0 <= b < d of T_{g^a}((a tau + b) / d), via the collapse
// d * sum_{d | n} c_n q^(n a / d). Known as far as every contributing series allows.
FracQSeries hecke_sum(const ReplicableFamily& family, int k);

struct Discrepancy {
  Rational exponent;
  Rational expected;  // Faber side
  Rational actual;    // Hecke side
};

struct ReplicabilityVerdict {
  int k = 0;
  bool pass = false;
  std::optional<Discrepancy> first_discrepancy;
  // Exponents were compared below this bound.
  Rational compared_below;
};

// For each k <= kmax compares hecke_sum(family, k) with F_k(T_g) on all exponents
// known to both sides and below prec. Throws if q^1 is not covered.
std::vector<ReplicabilityVerdict> check_completely_replicable(const ReplicableFamily& family, int kmax,
                                                              std::int64_t prec);

ReplicableFamily j_family(std::int64_t prec);
// T_g = eta(tau)^24 / eta(2 tau)^24 + shift, T_{g^2} = J.
ReplicableFamily order2_family(std::int64_t prec, const Rational& shift);

// "order kmax denom" then one series block ("denom trunc" and "k num/den" lines) per
// a = 1..order, blocks separated by blank lines.
struct FamilyFile {
  ReplicableFamily family;
  int kmax;
};
std::string to_text(const ReplicableFamily& family, int kmax);
FamilyFile parse_family(std::string_view text);

}  // namespace vnat::moonshine
