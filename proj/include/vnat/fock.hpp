#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vnat/rational.hpp"

namespace vnat::fock {

// One creation operator e^color t^mode with mode < 0 and color in 1..rank.
struct Creation {
  int mode;
  int color;
  friend auto operator<=>(const Creation&, const Creation&) = default;
};

// Creation operators applied to the vacuum, sorted by (mode, color): most negative
// mode first, colors increasing on ties.
using Monomial = std::vector<Creation>;

Monomial make_monomial(std::vector<Creation> ops, int rank);
int degree(const Monomial& m);

// A finite rational combination of monomials in the rank-d Heisenberg Fock space,
// with orthonormal colors.
class FockState {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit FockState(int rank);
  FockState(int rank, Terms terms);

  static FockState vacuum(int rank);
  static FockState basis(int rank, const Monomial& m);

  int rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Common degree of all terms; nullopt for zero or mixed states.
  std::optional<int> homogeneous_degree() const;
  int max_degree() const;

  void add(const Monomial& m, const Rational& c);
  FockState& operator+=(const FockState& other);
  FockState& operator-=(const FockState& other);

  friend bool operator==(const FockState&, const FockState&) = default;

 private:
  int rank_;
  Terms terms_;
};

FockState operator+(FockState a, const FockState& b);
FockState operator-(FockState a, const FockState& b);
FockState operator*(const Rational& c, const FockState& s);

// Action of e^color t^n. Creation for n < 0, zero for n = 0, and for n > 0 the
// contraction n * (multiplicity of (-n, color)) removing one such operator.
FockState apply_mode(int color, int n, const FockState& s);

// All monomials of exactly the given degree, in canonical order.
std::vector<Monomial> monomials_of_degree(int rank, int t);
std::vector<Monomial> monomials_up_to(int rank, int max_degree);

// Number of rank-colored partitions of n: the q^n coefficient of prod (1 - q^k)^-rank.
Integer graded_dimension(int rank, int n);

std::string to_string(const Monomial& m);
std::string to_string(const FockState& s);

}  // namespace vnat::fock
