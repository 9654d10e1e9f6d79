#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vnat/codes.hpp"
#include "vnat/rational.hpp"

namespace vnat::lattice {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;
using RationalMatrix = std::vector<std::vector<Rational>>;

class DegenerateLattice : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A full-rank lattice stored in a scaled integer frame: the integer row x stands for
// the real vector x / sqrt(scale), so <x, y> = (x . y) / scale.
//
// The basis is kept in Hermite normal form (upper triangular, positive pivots,
// entries above a pivot reduced into [0, pivot)), which is unique for a given point
// set and frame. Two lattices in the same frame are equal iff their bases are.
class ScaledLattice {
 public:
  // Any generating set of full rank; rows may outnumber the rank.
  ScaledLattice(std::int64_t scale, const IntMatrix& generating_rows);

  int rank() const { return static_cast<int>(basis_.size()); }
  std::int64_t scale() const { return scale_; }
  const IntMatrix& basis() const { return basis_; }

  // Exact solve c . basis = x by forward substitution; nullopt if x is not in the lattice.
  std::optional<IntVector> coefficients(const IntVector& x) const;
  bool contains(const IntVector& x) const { return coefficients(x).has_value(); }

  IntVector combine(const IntVector& coeffs) const;

  // Same point set in the frame with scale * k^2 (every coordinate multiplied by k).
  ScaledLattice rescaled(std::int64_t k) const;
  // Divides out the largest common factor g of all coordinates with g^2 | scale.
  ScaledLattice normalized() const;

  friend bool operator==(const ScaledLattice&, const ScaledLattice&) = default;

 private:
  std::int64_t scale_;
  IntMatrix basis_;
};

Rational norm(const IntVector& x, std::int64_t scale);
Rational inner_product(const IntVector& x, const IntVector& y, std::int64_t scale);
std::int64_t dot(const IntVector& x, const IntVector& y);

RationalMatrix gram_matrix(const ScaledLattice& lattice);
bool is_integral(const ScaledLattice& lattice);
bool is_even(const ScaledLattice& lattice);
Rational determinant(const ScaledLattice& lattice);
bool is_unimodular(const ScaledLattice& lattice);
ScaledLattice dual_lattice(const ScaledLattice& lattice);

// Point-set equality across frames whose scales differ by a rational square.
bool same_point_set(const ScaledLattice& a, const ScaledLattice& b);
// Index [outer : inner] of a sublattice in the same frame (after common rescaling).
Integer sublattice_index(const ScaledLattice& outer, const ScaledLattice& inner);
bool is_sublattice(const ScaledLattice& inner, const ScaledLattice& outer);

// Kernel of the character x -> ((weights . x) / divisor) mod modulus. The quotient
// (weights . x) / divisor must be an integer on every basis vector.
ScaledLattice kernel_of_character(const ScaledLattice& lattice, const IntVector& weights,
                                  std::int64_t divisor, std::int64_t modulus);

// Lattice generated by `lattice` and one extra vector given in the same frame.
ScaledLattice extend(const ScaledLattice& lattice, const IntVector& glue);

// --- Constructions from a doubly even length-24 code -------------------------------

// The Niemeier lattice with root system A1^24 in the sqrt(2) frame: spanned by the
// doubled unit vectors 2e_i and the code generators as 0/1 vectors.
ScaledLattice niemeier_a1_24(const codes::BinaryCode& code);

// The index-2 sublattice of N(A1^24) pairing integrally with (1,...,1)/sqrt(8),
// in the sqrt(8) frame.
ScaledLattice lambda0(const codes::BinaryCode& code);

// Lambda0 extended by (-3, 1, ..., 1) in the sqrt(8) frame.
ScaledLattice leech_lattice(const codes::BinaryCode& code);

IntVector leech_glue_vector();

// Congruence description of the Leech lattice in the sqrt(8) frame: the coordinate
// sum is 4m, and the positions where x_i is not m mod 4 form a codeword on which
// x_i is m mod 2.
bool leech_membership(const codes::BinaryCode& code, const IntVector& x);

// Extensions L0 + Z*gamma over the nonzero classes of L0^dual / L0 that are even and
// unimodular. Requires L0^dual / L0 to be elementary abelian of order 4.
std::vector<ScaledLattice> even_unimodular_extensions(const ScaledLattice& l0);

// Reference lattices.
ScaledLattice a1_lattice();
ScaledLattice integer_lattice(int rank);
ScaledLattice e8_lattice();

// "rank scale" then rank rows of rank integers.
std::string to_text(const ScaledLattice& lattice);
ScaledLattice parse_lattice(std::string_view text);

namespace detail {
// Row-style Hermite normal form of an integer matrix with `cols` columns. Zero rows
// are dropped; the result has one row per pivot.
std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows,
                                                      std::size_t cols);
}  // namespace detail

}  // namespace vnat::lattice
