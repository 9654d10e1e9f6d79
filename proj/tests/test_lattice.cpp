#include <random>

#include "doctest.h"
#include "vnat/codes.hpp"
#include "vnat/lattice.hpp"

using namespace vnat;
using namespace vnat::lattice;

namespace {

// Exact rational solve of c . rows = x by Gaussian elimination on the given rows;
// returns whether a solution exists with all c integral. Independent of the HNF.
bool rational_solve_integral(const IntMatrix& rows, const IntVector& x) {
  const std::size_t n = rows.size();
  const std::size_t m = x.size();
  // Unknowns c_0..c_{n-1}; equations one per coordinate: sum_i c_i rows[i][j] = x_j.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[j][i] = Rational(static_cast<long>(rows[i][j]));
    a[j][n] = Rational(static_cast<long>(x[j]));
  }
  std::vector<int> pivot_row(n, -1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t p = r;
    while (p < m && a[p][col] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t k = 0; k < m; ++k) {
      if (k == r || a[k][col] == 0) continue;
      const Rational f = a[k][col] / a[r][col];
      for (std::size_t c = col; c <= n; ++c) a[k][c] -= f * a[r][c];
    }
    pivot_row[col] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t k = r; k < m; ++k) {
    if (a[k][n] != 0) return false;
  }
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_row[col] < 0) continue;
    const auto& row = a[static_cast<std::size_t>(pivot_row[col])];
    Rational c = row[n] / row[col];
    c.canonicalize();
    if (!is_integer(c)) return false;
  }
  return true;
}

// Determinant of a rational matrix by elimination.
Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// Redraws until the matrix is nonsingular.
IntMatrix random_matrix(std::mt19937_64& rng, int n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> e(-bound, bound);
  IntMatrix m(static_cast<std::size_t>(n), IntVector(static_cast<std::size_t>(n)));
  for (;;) {
    std::vector<std::vector<Rational>> q;
    for (auto& row : m) {
      for (auto& v : row) v = e(rng);
      q.emplace_back(row.begin(), row.end());
    }
    if (det(std::move(q)) != 0) return m;
  }
}

}  // namespace

TEST_CASE("HNF basis is unique for a point set") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    IntMatrix rows = random_matrix(rng, n, 9);
    ScaledLattice l(1, rows);
    // Random unimodular row operations and an extra redundant row.
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<std::int64_t> mult(-3, 3);
    for (int step = 0; step < 20; ++step) {
      const int i = pick(rng);
      const int j = pick(rng);
      if (i == j) continue;
      const std::int64_t f = mult(rng);
      for (int k = 0; k < n; ++k) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] += f * rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
    IntVector extra(static_cast<std::size_t>(n), 0);
    for (const auto& row : rows) {
      const std::int64_t f = mult(rng);
      for (int k = 0; k < n; ++k) extra[static_cast<std::size_t>(k)] += f * row[static_cast<std::size_t>(k)];
    }
    rows.push_back(extra);
    try {
      CHECK(ScaledLattice(1, rows) == l);
    } catch (const DegenerateLattice&) {
      FAIL("transformed rows lost rank");
    }
    const auto& b = l.basis();
    for (int i = 0; i < n; ++i) {
      const auto& row = b[static_cast<std::size_t>(i)];
      CHECK(row[static_cast<std::size_t>(i)] > 0);
      for (int k = 0; k < i; ++k) CHECK(row[static_cast<std::size_t>(k)] == 0);
      for (int r = 0; r < i; ++r) {
        const auto v = b[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)];
        CHECK(v >= 0);
        CHECK(v < row[static_cast<std::size_t>(i)]);
      }
    }
  }
}

TEST_CASE("degenerate generating sets are rejected") {
  CHECK_THROWS_AS(ScaledLattice(1, {{1, 2}, {2, 4}}), DegenerateLattice);
  CHECK_THROWS_AS(ScaledLattice(1, {{1, 0, 0}, {0, 1, 0}}), DegenerateLattice);
  CHECK_THROWS_AS(ScaledLattice(0, {{1}}), std::invalid_argument);
}

TEST_CASE("determinant agrees with the Gram determinant and the dual is an involution") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    const std::int64_t scale = 1 + trial % 3;
    IntMatrix rows = random_matrix(rng, n, 6);
    ScaledLattice l(1, rows);
    try {
      l = ScaledLattice(scale, rows);
    } catch (const DegenerateLattice&) {
      continue;
    }
    CHECK(determinant(l) == det(gram_matrix(l)));
    const ScaledLattice d = dual_lattice(l);
    CHECK(same_point_set(dual_lattice(d), l));
    CHECK(determinant(d) * determinant(l) == 1);
    if (is_integral(l)) {
      CHECK(is_sublattice(l, d));
      CHECK(Rational(sublattice_index(d, l)) == abs(determinant(l)));
    }
  }
}

TEST_CASE("reference lattices") {
  CHECK(is_even(e8_lattice()));
  CHECK(is_unimodular(e8_lattice()));
  CHECK(is_unimodular(integer_lattice(5)));
  CHECK_FALSE(is_even(integer_lattice(5)));
  CHECK(determinant(a1_lattice()) == 2);
  CHECK(norm(a1_lattice().basis()[0], a1_lattice().scale()) == 2);
}

TEST_CASE("rescaling and normalization preserve the point set") {
  const ScaledLattice e8 = e8_lattice();
  const ScaledLattice big = e8.rescaled(3);
  CHECK(big.scale() == e8.scale() * 9);
  CHECK(same_point_set(big, e8));
  CHECK(big.normalized() == e8.normalized());
  CHECK(gram_matrix(big) == gram_matrix(e8));
  CHECK_FALSE(same_point_set(integer_lattice(8), e8));
}

TEST_CASE("kernel of a character") {
  const ScaledLattice z4 = integer_lattice(4);
  const ScaledLattice d4 = kernel_of_character(z4, {1, 1, 1, 1}, 1, 2);
  CHECK(sublattice_index(z4, d4) == 2);
  CHECK(d4.contains({1, 1, 0, 0}));
  CHECK_FALSE(d4.contains({1, 0, 0, 0}));
  CHECK(is_even(d4));
  CHECK(determinant(d4) == 4);
}

TEST_CASE("constructions from the Golay code") {
  const auto code = codes::golay_code();
  const ScaledLattice n = niemeier_a1_24(code);
  const ScaledLattice l0 = lambda0(code);
  const ScaledLattice leech = leech_lattice(code);
  CHECK(n.scale() == 2);
  CHECK(is_even(n));
  CHECK(is_unimodular(n));
  CHECK(is_even(leech));
  CHECK(is_unimodular(leech));
  CHECK(is_sublattice(l0, n.rescaled(2)));
  CHECK(sublattice_index(n.rescaled(2), l0) == 2);
  CHECK(sublattice_index(leech, l0) == 2);
  CHECK(determinant(l0) == 4);
  CHECK(leech.contains(leech_glue_vector()));
  CHECK_FALSE(l0.contains(leech_glue_vector()));

  const auto ext = even_unimodular_extensions(l0);
  REQUIRE(ext.size() == 2);
  const int as_n = (same_point_set(ext[0], n) ? 1 : 0) + (same_point_set(ext[1], n) ? 1 : 0);
  const int as_leech = (same_point_set(ext[0], leech) ? 1 : 0) + (same_point_set(ext[1], leech) ? 1 : 0);
  CHECK(as_n == 1);
  CHECK(as_leech == 1);

  CHECK_THROWS_AS(niemeier_a1_24(codes::BinaryCode(8, {0b11110000, 0b00001111})), std::invalid_argument);
  CHECK_THROWS_AS(even_unimodular_extensions(n), std::invalid_argument);
}

TEST_CASE("Leech congruence description matches the linear solve") {
  const auto code = codes::golay_code();
  const ScaledLattice leech = leech_lattice(code);
  const IntMatrix& generators = leech.basis();
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<std::int64_t> coeff(-2, 2);
  std::uniform_int_distribution<int> pos(0, 23);
  std::uniform_int_distribution<std::int64_t> bump(-4, 4);
  int members = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    IntVector c(24);
    for (auto& v : c) v = coeff(rng);
    IntVector x = leech.combine(c);
    if (trial % 2) {
      const int moves = 1 + trial % 3;
      for (int k = 0; k < moves; ++k) x[static_cast<std::size_t>(pos(rng))] += bump(rng);
    }
    const bool solved = rational_solve_integral(generators, x);
    CHECK(leech_membership(code, x) == solved);
    CHECK(leech.contains(x) == solved);
    members += solved ? 1 : 0;
  }
  CHECK(members > 5000);
  CHECK(members < 10000);
  // m = 2 and no coordinate is 2 mod 4, so the exceptional positions are all of them.
  IntVector v(24, 0);
  v[0] = 4;
  v[1] = 4;
  CHECK(leech_membership(code, v));
}

TEST_CASE("text round trip") {
  const ScaledLattice e8 = e8_lattice();
  CHECK(parse_lattice(to_text(e8)) == e8);
  CHECK_THROWS_AS(parse_lattice("2 1\n1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_lattice("2 1\n1 0\n2 0\n"), DegenerateLattice);
}
