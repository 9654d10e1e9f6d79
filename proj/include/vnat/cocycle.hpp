#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vnat/lattice.hpp"

namespace vnat::cocycle {

// Sign function eps(a, b) = (-1)^B(a, b) on an even lattice, where B is the
// upper-triangular lift of the Gram matrix mod 2 on the lattice's basis:
// B_ij = G_ij for i < j, B_ii = G_ii / 2, B_ij = 0 for i > j (all mod 2).
class LatticeCocycle {
 public:
  explicit LatticeCocycle(lattice::ScaledLattice l);

  const lattice::ScaledLattice& base() const { return lattice_; }
  const std::vector<std::vector<int>>& lift() const { return lift_; }

  // B(a, b) mod 2 for coefficient vectors with respect to the basis.
  int exponent(const lattice::IntVector& a, const lattice::IntVector& b) const;
  // +1 or -1.
  int epsilon(const lattice::IntVector& a, const lattice::IntVector& b) const;
  // eps on lattice vectors given in the scaled frame; throws if either is not in the lattice.
  int epsilon_of_vectors(const lattice::IntVector& x, const lattice::IntVector& y) const;

 private:
  lattice::ScaledLattice lattice_;
  std::vector<std::vector<int>> lift_;
};

struct CommutatorReport {
  bool holds = true;
  std::size_t basis_pairs = 0;
  std::size_t random_pairs = 0;
  // Pairs (a, b) with odd inner product, where eps must anticommute.
  std::size_t odd_pairs = 0;
  std::optional<std::string> failure;
};

// Checks eps(a,b) eps(b,a) = (-1)^(a,b) on every ordered basis pair and on
// `trials` seeded random pairs with coefficients in [-3, 3]. The right side uses
// the inner product of the actual lattice vectors.
CommutatorReport verify_commutator(const LatticeCocycle& c, std::size_t trials, std::uint64_t seed);

// eps(a + b, c) = eps(a, c) eps(b, c) and eps(a, b + c) = eps(a, b) eps(a, c) on
// seeded random triples.
bool verify_bimultiplicative(const LatticeCocycle& c, std::size_t trials, std::uint64_t seed);

}  // namespace vnat::cocycle
