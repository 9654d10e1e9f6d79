#include "vnat/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vnat::lattice {

namespace detail {

std::vector<std::vector<Integer>> hermite_normal_form(std::vector<std::vector<Integer>> rows,
                                                      std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    // Euclid on column c over rows r.., leaving the gcd in row r.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0) {
      for (auto& v : rows[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace detail

namespace {

std::int64_t checked_int64(const Integer& z) { return to_int64(z); }

bool is_square(const Integer& n, Integer& root) {
  if (n < 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root * root == n;
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) {
    Integer d = v.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

// Inverse of an upper triangular integer matrix with nonzero diagonal.
RationalMatrix upper_triangular_inverse(const IntMatrix& b) {
  const std::size_t n = b.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    // Solve b * col = e_j, back substitution.
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc = (ii == j) ? Rational(1) : Rational(0);
      for (std::size_t k = ii + 1; k < n; ++k) {
        acc -= Rational(Integer(static_cast<long>(b[ii][k]))) * inv[k][j];
      }
      inv[ii][j] = acc / Rational(Integer(static_cast<long>(b[ii][ii])));
    }
  }
  return inv;
}

Integer basis_determinant(const ScaledLattice& l) {
  Integer d = 1;
  for (int i = 0; i < l.rank(); ++i) d *= Integer(static_cast<long>(l.basis()[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]));
  return d;
}

// Brings two lattices into one frame. Returns false if the scales differ by a
// non-square factor.
bool common_frame(const ScaledLattice& a, const ScaledLattice& b, ScaledLattice& a_out,
                  ScaledLattice& b_out) {
  Rational ratio(Integer(static_cast<long>(a.scale())), Integer(static_cast<long>(b.scale())));
  ratio.canonicalize();
  Integer p;
  Integer q;
  if (!is_square(ratio.get_num(), p) || !is_square(ratio.get_den(), q)) return false;
  // a.scale * q^2 == b.scale * p^2
  a_out = a.rescaled(checked_int64(q));
  b_out = b.rescaled(checked_int64(p));
  return true;
}

}  // namespace

ScaledLattice::ScaledLattice(std::int64_t scale, const IntMatrix& generating_rows) : scale_(scale) {
  if (scale <= 0) throw std::invalid_argument("lattice scale must be positive");
  if (generating_rows.empty()) throw DegenerateLattice("lattice needs at least one generator");
  const std::size_t cols = generating_rows.front().size();
  std::vector<std::vector<Integer>> rows;
  rows.reserve(generating_rows.size());
  for (const auto& row : generating_rows) {
    if (row.size() != cols) throw std::invalid_argument("generator rows have inconsistent length");
    std::vector<Integer> r;
    r.reserve(cols);
    for (auto v : row) r.emplace_back(static_cast<long>(v));
    rows.push_back(std::move(r));
  }
  auto hnf = detail::hermite_normal_form(std::move(rows), cols);
  if (hnf.size() != cols) {
    throw DegenerateLattice("generators do not span a full-rank lattice (rank " +
                            std::to_string(hnf.size()) + " in dimension " + std::to_string(cols) + ")");
  }
  basis_.assign(cols, IntVector(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) basis_[i][j] = checked_int64(hnf[i][j]);
  }
}

std::optional<IntVector> ScaledLattice::coefficients(const IntVector& x) const {
  const std::size_t n = basis_.size();
  if (x.size() != n) return std::nullopt;
  std::vector<__int128> residual(x.begin(), x.end());
  IntVector c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const __int128 pivot = basis_[i][i];
    if (residual[i] % pivot != 0) return std::nullopt;
    const __int128 ci = residual[i] / pivot;
    if (ci > INT64_MAX || ci < INT64_MIN) throw std::overflow_error("coefficient overflow");
    c[i] = static_cast<std::int64_t>(ci);
    if (ci == 0) continue;
    for (std::size_t j = i; j < n; ++j) residual[j] -= ci * basis_[i][j];
  }
  return c;
}

IntVector ScaledLattice::combine(const IntVector& coeffs) const {
  const std::size_t n = basis_.size();
  if (coeffs.size() != n) throw std::invalid_argument("coefficient vector has wrong length");
  IntVector x(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t j = i; j < n; ++j) x[j] += coeffs[i] * basis_[i][j];
  }
  return x;
}

ScaledLattice ScaledLattice::rescaled(std::int64_t k) const {
  if (k <= 0) throw std::invalid_argument("rescaling factor must be positive");
  IntMatrix rows = basis_;
  for (auto& row : rows) {
    for (auto& v : row) v *= k;
  }
  return ScaledLattice(scale_ * k * k, rows);
}

ScaledLattice ScaledLattice::normalized() const {
  std::int64_t g = 0;
  for (const auto& row : basis_) {
    for (auto v : row) g = std::gcd(g, v);
  }
  // Largest divisor h of g with h^2 | scale.
  std::int64_t best = 1;
  for (std::int64_t h = 1; h <= g; ++h) {
    if (g % h == 0 && scale_ % (h * h) == 0) best = h;
  }
  if (best == 1) return *this;
  IntMatrix rows = basis_;
  for (auto& row : rows) {
    for (auto& v : row) v /= best;
  }
  return ScaledLattice(scale_ / (best * best), rows);
}

std::int64_t dot(const IntVector& x, const IntVector& y) {
  __int128 acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += static_cast<__int128>(x[i]) * y[i];
  if (acc > INT64_MAX || acc < INT64_MIN) throw std::overflow_error("dot product overflow");
  return static_cast<std::int64_t>(acc);
}

Rational inner_product(const IntVector& x, const IntVector& y, std::int64_t scale) {
  return make_rational(dot(x, y), scale);
}

Rational norm(const IntVector& x, std::int64_t scale) { return inner_product(x, x, scale); }

RationalMatrix gram_matrix(const ScaledLattice& lattice) {
  const auto& b = lattice.basis();
  const std::size_t n = b.size();
  RationalMatrix g(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      g[i][j] = inner_product(b[i], b[j], lattice.scale());
      g[j][i] = g[i][j];
    }
  }
  return g;
}

bool is_integral(const ScaledLattice& lattice) {
  for (const auto& row : gram_matrix(lattice)) {
    for (const auto& v : row) {
      if (!is_integer(v)) return false;
    }
  }
  return true;
}

bool is_even(const ScaledLattice& lattice) {
  const auto g = gram_matrix(lattice);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (!is_integer(g[i][j])) return false;
    }
    if (g[i][i].get_num() % 2 != 0) return false;
  }
  return true;
}

Rational determinant(const ScaledLattice& lattice) {
  Integer det_b = basis_determinant(lattice);
  Integer s_pow;
  mpz_pow_ui(s_pow.get_mpz_t(), Integer(static_cast<long>(lattice.scale())).get_mpz_t(),
             static_cast<unsigned long>(lattice.rank()));
  Rational d(det_b * det_b, s_pow);
  d.canonicalize();
  return d;
}

bool is_unimodular(const ScaledLattice& lattice) { return abs(determinant(lattice)) == 1; }

ScaledLattice dual_lattice(const ScaledLattice& lattice) {
  const auto inv = upper_triangular_inverse(lattice.basis());
  const std::size_t n = inv.size();
  const Rational s(Integer(static_cast<long>(lattice.scale())));
  // Dual basis in the current frame: rows of scale * (B^-1)^T.
  std::vector<std::vector<Rational>> z(n, std::vector<Rational>(n));
  std::vector<Rational> all;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      z[i][j] = s * inv[j][i];
      all.push_back(z[i][j]);
    }
  }
  const Integer k = lcm_of_denominators(all);
  IntMatrix rows(n, IntVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = z[i][j] * Rational(k);
      rows[i][j] = checked_int64(v.get_num());
    }
  }
  const std::int64_t kk = checked_int64(k);
  return ScaledLattice(lattice.scale() * kk * kk, rows).normalized();
}

bool same_point_set(const ScaledLattice& a, const ScaledLattice& b) {
  if (a.rank() != b.rank()) return false;
  ScaledLattice a2 = a;
  ScaledLattice b2 = b;
  if (!common_frame(a, b, a2, b2)) return false;
  return a2 == b2;
}

bool is_sublattice(const ScaledLattice& inner, const ScaledLattice& outer) {
  if (inner.rank() != outer.rank()) return false;
  ScaledLattice i2 = inner;
  ScaledLattice o2 = outer;
  if (!common_frame(inner, outer, i2, o2)) return false;
  return std::all_of(i2.basis().begin(), i2.basis().end(),
                     [&](const IntVector& row) { return o2.contains(row); });
}

Integer sublattice_index(const ScaledLattice& outer, const ScaledLattice& inner) {
  ScaledLattice i2 = inner;
  ScaledLattice o2 = outer;
  if (inner.rank() != outer.rank() || !common_frame(inner, outer, i2, o2)) {
    throw std::invalid_argument("lattices do not share a frame");
  }
  for (const auto& row : i2.basis()) {
    if (!o2.contains(row)) throw std::invalid_argument("not a sublattice");
  }
  return basis_determinant(i2) / basis_determinant(o2);
}

ScaledLattice kernel_of_character(const ScaledLattice& lattice, const IntVector& weights,
                                  std::int64_t divisor, std::int64_t modulus) {
  if (divisor <= 0 || modulus <= 0) throw std::invalid_argument("divisor and modulus must be positive");
  const auto& b = lattice.basis();
  const std::size_t n = b.size();
  // Rows (value_i | e_i) plus (modulus | 0); after HNF the rows with a zero first
  // entry are exactly a basis of the coefficient kernel.
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t raw = dot(weights, b[i]);
    if (raw % divisor != 0) throw std::invalid_argument("character is not integral on the lattice");
    std::vector<Integer> row(n + 1, Integer(0));
    row[0] = Integer(static_cast<long>(((raw / divisor) % modulus + modulus) % modulus));
    row[i + 1] = 1;
    rows.push_back(std::move(row));
  }
  std::vector<Integer> last(n + 1, Integer(0));
  last[0] = Integer(static_cast<long>(modulus));
  rows.push_back(std::move(last));
  const auto hnf = detail::hermite_normal_form(std::move(rows), n + 1);
  IntMatrix generators;
  for (const auto& row : hnf) {
    if (row[0] != 0) continue;
    IntVector c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = checked_int64(row[i + 1]);
    generators.push_back(lattice.combine(c));
  }
  return ScaledLattice(lattice.scale(), generators);
}

ScaledLattice extend(const ScaledLattice& lattice, const IntVector& glue) {
  IntMatrix rows = lattice.basis();
  rows.push_back(glue);
  return ScaledLattice(lattice.scale(), rows);
}

namespace {

void require_golay_shape(const codes::BinaryCode& code) {
  if (code.length() != codes::kGolayLength) {
    throw std::invalid_argument("code must have length 24");
  }
  if (!codes::is_doubly_even(code)) {
    throw std::invalid_argument("code must be doubly even, otherwise the lattice is not even");
  }
}

}  // namespace

ScaledLattice niemeier_a1_24(const codes::BinaryCode& code) {
  require_golay_shape(code);
  IntMatrix rows;
  for (int i = 0; i < codes::kGolayLength; ++i) {
    IntVector r(codes::kGolayLength, 0);
    r[static_cast<std::size_t>(i)] = 2;
    rows.push_back(std::move(r));
  }
  for (codes::Word w : code.generators()) {
    IntVector r(codes::kGolayLength, 0);
    for (int p = 0; p < codes::kGolayLength; ++p) r[static_cast<std::size_t>(p)] = (w >> p) & 1U;
    rows.push_back(std::move(r));
  }
  return ScaledLattice(2, rows);
}

ScaledLattice lambda0(const codes::BinaryCode& code) {
  const ScaledLattice n8 = niemeier_a1_24(code).rescaled(2);
  return kernel_of_character(n8, IntVector(codes::kGolayLength, 1), 4, 2);
}

IntVector leech_glue_vector() {
  IntVector g(codes::kGolayLength, 1);
  g[0] = -3;
  return g;
}

ScaledLattice leech_lattice(const codes::BinaryCode& code) {
  return extend(lambda0(code), leech_glue_vector());
}

bool leech_membership(const codes::BinaryCode& code, const IntVector& x) {
  if (x.size() != static_cast<std::size_t>(codes::kGolayLength)) return false;
  std::int64_t sum = 0;
  for (auto v : x) sum += v;
  if (sum % 4 != 0) return false;
  const std::int64_t m = sum / 4;
  auto mod = [](std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; };
  codes::Word s = 0;
  for (int i = 0; i < codes::kGolayLength; ++i) {
    const std::int64_t xi = x[static_cast<std::size_t>(i)];
    if (mod(xi - m, 4) == 0) continue;
    if (mod(xi - m, 2) != 0) return false;
    s |= codes::Word{1} << i;
  }
  return code.contains(s);
}

std::vector<ScaledLattice> even_unimodular_extensions(const ScaledLattice& l0) {
  const ScaledLattice dual = dual_lattice(l0);
  ScaledLattice inner = l0;
  ScaledLattice outer = dual;
  if (!common_frame(l0, dual, inner, outer)) throw std::logic_error("dual lattice frame mismatch");
  const Integer index = basis_determinant(inner) / basis_determinant(outer);
  if (index != 4) {
    throw std::invalid_argument("dual quotient has order " + index.get_str() + ", expected 4");
  }
  for (const auto& row : outer.basis()) {
    IntVector twice = row;
    for (auto& v : twice) v *= 2;
    if (!inner.contains(twice)) {
      throw std::invalid_argument("dual quotient is cyclic of order 4, not elementary abelian");
    }
  }
  // Coset representatives of dual / L0.
  auto subtract = [](const IntVector& a, const IntVector& b) {
    IntVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
  };
  auto add = [](const IntVector& a, const IntVector& b) {
    IntVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] + b[i];
    return d;
  };
  std::vector<IntVector> reps{IntVector(static_cast<std::size_t>(inner.rank()), 0)};
  for (const auto& row : outer.basis()) {
    if (reps.size() == 4) break;
    const bool known = std::any_of(reps.begin(), reps.end(),
                                   [&](const IntVector& r) { return inner.contains(subtract(row, r)); });
    if (known) continue;
    const auto current = reps;
    for (const auto& r : current) reps.push_back(add(row, r));
  }
  std::vector<ScaledLattice> out;
  for (std::size_t i = 1; i < reps.size(); ++i) {
    ScaledLattice candidate = extend(inner, reps[i]).normalized();
    if (is_even(candidate) && is_unimodular(candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

ScaledLattice a1_lattice() { return ScaledLattice(2, {{2}}); }

ScaledLattice integer_lattice(int rank) {
  IntMatrix rows(static_cast<std::size_t>(rank), IntVector(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return ScaledLattice(1, rows);
}

ScaledLattice e8_lattice() {
  // D8 doubled, plus the all-ones glue, in the frame x / 2.
  IntMatrix rows;
  for (int i = 0; i < 7; ++i) {
    IntVector r(8, 0);
    r[static_cast<std::size_t>(i)] = 2;
    r[static_cast<std::size_t>(i + 1)] = -2;
    rows.push_back(r);
  }
  IntVector last(8, 0);
  last[6] = 2;
  last[7] = 2;
  rows.push_back(last);
  rows.push_back(IntVector(8, 1));
  return ScaledLattice(4, rows);
}

std::string to_text(const ScaledLattice& lattice) {
  std::ostringstream out;
  out << lattice.rank() << ' ' << lattice.scale() << '\n';
  for (const auto& row : lattice.basis()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

ScaledLattice parse_lattice(std::string_view text) {
  std::istringstream in{std::string(text)};
  int rank = 0;
  std::int64_t scale = 0;
  if (!(in >> rank >> scale) || rank <= 0 || scale <= 0) {
    throw std::invalid_argument("malformed lattice header");
  }
  IntMatrix rows(static_cast<std::size_t>(rank), IntVector(static_cast<std::size_t>(rank)));
  for (auto& row : rows) {
    for (auto& v : row) {
      if (!(in >> v)) throw std::invalid_argument("malformed lattice row");
    }
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("trailing data after lattice rows");
  return ScaledLattice(scale, rows);
}

}  // namespace vnat::lattice
