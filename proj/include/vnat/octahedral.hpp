#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vnat/codes.hpp"
#include "vnat/lattice.hpp"
#include "vnat/rational.hpp"

namespace vnat::octahedral {

// Element a0 + a1 z + a2 z^2 + a3 z^3 of Q(z), z a primitive 8th root of unity
// (z^4 = -1). Then i = z^2 and 1/sqrt(2) = (z - z^3) / 2.
class Cyclotomic8 {
 public:
  Cyclotomic8() = default;
  Cyclotomic8(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3);
  static Cyclotomic8 integer(std::int64_t v);
  static Cyclotomic8 zeta();
  static Cyclotomic8 imaginary_unit();
  static Cyclotomic8 inv_sqrt2();

  const std::array<Rational, 4>& coords() const { return c_; }
  // Complex conjugate: z -> z^-1 = -z^3.
  Cyclotomic8 conj() const;
  bool is_zero() const;

  friend Cyclotomic8 operator+(const Cyclotomic8& a, const Cyclotomic8& b);
  friend Cyclotomic8 operator-(const Cyclotomic8& a, const Cyclotomic8& b);
  friend Cyclotomic8 operator-(const Cyclotomic8& a);
  friend Cyclotomic8 operator*(const Cyclotomic8& a, const Cyclotomic8& b);
  friend bool operator==(const Cyclotomic8& a, const Cyclotomic8& b) { return a.c_ == b.c_; }
  friend bool operator<(const Cyclotomic8& a, const Cyclotomic8& b) { return a.c_ < b.c_; }

 private:
  std::array<Rational, 4> c_{Rational(0), Rational(0), Rational(0), Rational(0)};
};

using Matrix2 = std::array<std::array<Cyclotomic8, 2>, 2>;

Matrix2 identity_matrix();
Matrix2 multiply(const Matrix2& a, const Matrix2& b);
Matrix2 negate(const Matrix2& a);
Matrix2 conjugate_transpose(const Matrix2& a);
Cyclotomic8 determinant(const Matrix2& a);
bool is_unitary(const Matrix2& a);
std::string to_string(const Matrix2& a);

// The unit quaternions i, j, k as the matrices diag(i, -i), [[0, i], [i, 0]],
// [[0, -1], [1, 0]].
Matrix2 quaternion_i();
Matrix2 quaternion_j();
Matrix2 quaternion_k();
Matrix2 minus_one();

// The 48 elements +-1, +-i, +-j, +-k, (+-1 +-i +-j +-k)/2 and (+-x +-y)/sqrt(2) for
// distinct x, y in {1, i, j, k}. Throws std::logic_error unless the set is closed
// under multiplication, unitary with determinant 1, and of size 48.
std::vector<Matrix2> binary_octahedral_group();

// Multiplicative order of a group element (at most 8 in this group).
int element_order(const Matrix2& g);

// Histogram of element orders in 2O / {+-1}.
std::map<int, int> quotient_order_profile();
const std::map<int, int>& symmetric_group4_profile();

// j E j^-1 = F, j F j^-1 = E, j H j^-1 = -H for the sl2 basis H, E, F.
bool adjoint_exchange_holds();

// For each ordered pair (x, y) among the images of i, j, k in 2O / {+-1}: some g
// with g x g^-1 = +-y. Returns true if all six pairs are connected.
bool quaternion_images_conjugate();

enum class Generator { I, J, K, MinusOne };

// How a generator acts on the Fock module of momentum u in N(A1^24): i and -1 act
// by the scalar exp(2 pi i * exponent); j and k send the momentum u to -u.
struct ScalarAction {
  bool is_scalar = true;
  Rational exponent;  // in [0, 1), meaningful when is_scalar
  std::string description;
};

// u in the sqrt(2) frame of N(A1^24) (stored integers x_a = sqrt(2) u^a). For i the
// exponent is (sum x_a) / 4 mod 1, for -1 it is (sum x_a) / 2 mod 1.
ScalarAction scalar_action(Generator g, const lattice::ScaledLattice& n, const lattice::IntVector& u);

// {u in N : scalar_action(i, u) = 1}, an index-2 sublattice, in the frame of N.
lattice::ScaledLattice kernel_of_i_action(const lattice::ScaledLattice& n);

// Subsets T of the 24 coordinates whose sign vector acts trivially on every
// momentum u of N(A1^24), i.e. sum over T of x_a is even for all u in N.
codes::BinaryCode torus_trivial_subgroup(const codes::BinaryCode& code);

}  // namespace vnat::octahedral
