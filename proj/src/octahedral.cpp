#include "vnat/octahedral.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace vnat::octahedral {

Cyclotomic8::Cyclotomic8(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3)
    : c_{a0, a1, a2, a3} {
  for (auto& v : c_) v.canonicalize();
}

Cyclotomic8 Cyclotomic8::integer(std::int64_t v) { return {make_rational(v), 0, 0, 0}; }
Cyclotomic8 Cyclotomic8::zeta() { return {0, 1, 0, 0}; }
Cyclotomic8 Cyclotomic8::imaginary_unit() { return {0, 0, 1, 0}; }
Cyclotomic8 Cyclotomic8::inv_sqrt2() { return {0, make_rational(1, 2), 0, make_rational(-1, 2)}; }

Cyclotomic8 Cyclotomic8::conj() const { return {c_[0], -c_[3], -c_[2], -c_[1]}; }

bool Cyclotomic8::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

Cyclotomic8 operator+(const Cyclotomic8& a, const Cyclotomic8& b) {
  return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}

Cyclotomic8 operator-(const Cyclotomic8& a) { return {-a.c_[0], -a.c_[1], -a.c_[2], -a.c_[3]}; }

Cyclotomic8 operator-(const Cyclotomic8& a, const Cyclotomic8& b) { return a + (-b); }

Cyclotomic8 operator*(const Cyclotomic8& a, const Cyclotomic8& b) {
  std::array<Rational, 4> out{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Rational p = a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
      if (i + j < 4) {
        out[static_cast<std::size_t>(i + j)] += p;
      } else {
        out[static_cast<std::size_t>(i + j - 4)] -= p;
      }
    }
  }
  return {out[0], out[1], out[2], out[3]};
}

namespace {

Matrix2 make(const Cyclotomic8& a, const Cyclotomic8& b, const Cyclotomic8& c, const Cyclotomic8& d) {
  return Matrix2{{{a, b}, {c, d}}};
}

Matrix2 add(const Matrix2& a, const Matrix2& b) {
  Matrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out[r][c] = a[r][c] + b[r][c];
  }
  return out;
}

Matrix2 scale(const Cyclotomic8& s, const Matrix2& a) {
  Matrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out[r][c] = s * a[r][c];
  }
  return out;
}

Matrix2 conjugate_by(const Matrix2& g, const Matrix2& x) {
  return multiply(multiply(g, x), conjugate_transpose(g));
}

std::string to_string(const Cyclotomic8& x) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < 4; ++i) out << (i ? "," : "") << vnat::to_string(x.coords()[i]);
  out << ")";
  return out.str();
}

}  // namespace

Matrix2 identity_matrix() { return make(Cyclotomic8::integer(1), {}, {}, Cyclotomic8::integer(1)); }

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  Matrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
  }
  return out;
}

Matrix2 negate(const Matrix2& a) { return scale(Cyclotomic8::integer(-1), a); }

Matrix2 conjugate_transpose(const Matrix2& a) {
  return make(a[0][0].conj(), a[1][0].conj(), a[0][1].conj(), a[1][1].conj());
}

Cyclotomic8 determinant(const Matrix2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

bool is_unitary(const Matrix2& a) { return multiply(a, conjugate_transpose(a)) == identity_matrix(); }

std::string to_string(const Matrix2& a) {
  return "[[" + to_string(a[0][0]) + ", " + to_string(a[0][1]) + "], [" + to_string(a[1][0]) + ", " +
         to_string(a[1][1]) + "]]";
}

Matrix2 quaternion_i() {
  const auto i = Cyclotomic8::imaginary_unit();
  return make(i, {}, {}, -i);
}

Matrix2 quaternion_j() {
  const auto i = Cyclotomic8::imaginary_unit();
  return make({}, i, i, {});
}

Matrix2 quaternion_k() { return make({}, Cyclotomic8::integer(-1), Cyclotomic8::integer(1), {}); }

Matrix2 minus_one() { return negate(identity_matrix()); }

std::vector<Matrix2> binary_octahedral_group() {
  const std::array<Matrix2, 4> units{identity_matrix(), quaternion_i(), quaternion_j(), quaternion_k()};
  std::set<Matrix2> elements;
  for (const auto& x : units) {
    elements.insert(x);
    elements.insert(negate(x));
  }
  const Cyclotomic8 half{make_rational(1, 2), 0, 0, 0};
  for (int signs = 0; signs < 16; ++signs) {
    Matrix2 sum;
    for (int t = 0; t < 4; ++t) {
      const Matrix2& x = units[static_cast<std::size_t>(t)];
      sum = add(sum, ((signs >> t) & 1) ? negate(x) : x);
    }
    elements.insert(scale(half, sum));
  }
  const Cyclotomic8 r = Cyclotomic8::inv_sqrt2();
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      for (int signs = 0; signs < 4; ++signs) {
        const Matrix2 x = (signs & 1) ? negate(units[static_cast<std::size_t>(a)]) : units[static_cast<std::size_t>(a)];
        const Matrix2 y = (signs & 2) ? negate(units[static_cast<std::size_t>(b)]) : units[static_cast<std::size_t>(b)];
        elements.insert(scale(r, add(x, y)));
      }
    }
  }
  if (elements.size() != 48) {
    throw std::logic_error("binary octahedral group has " + std::to_string(elements.size()) + " elements");
  }
  for (const auto& g : elements) {
    if (!is_unitary(g) || determinant(g) != Cyclotomic8::integer(1)) {
      throw std::logic_error("element is not in SU(2): " + to_string(g));
    }
    for (const auto& h : elements) {
      if (!elements.count(multiply(g, h))) throw std::logic_error("binary octahedral group is not closed");
    }
  }
  return {elements.begin(), elements.end()};
}

int element_order(const Matrix2& g) {
  Matrix2 p = g;
  for (int k = 1; k <= 8; ++k) {
    if (p == identity_matrix()) return k;
    p = multiply(p, g);
  }
  throw std::invalid_argument("element order exceeds 8");
}

std::map<int, int> quotient_order_profile() {
  const auto group = binary_octahedral_group();
  std::set<Matrix2> seen;
  std::map<int, int> profile;
  for (const auto& g : group) {
    if (seen.count(g)) continue;
    seen.insert(g);
    seen.insert(negate(g));
    Matrix2 p = g;
    int k = 1;
    while (p != identity_matrix() && p != minus_one()) {
      p = multiply(p, g);
      ++k;
    }
    ++profile[k];
  }
  return profile;
}

const std::map<int, int>& symmetric_group4_profile() {
  static const std::map<int, int> profile{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
  return profile;
}

bool adjoint_exchange_holds() {
  const auto one = Cyclotomic8::integer(1);
  const Matrix2 h = make(one, {}, {}, -one);
  const Matrix2 e = make({}, one, {}, {});
  const Matrix2 f = make({}, {}, one, {});
  const Matrix2 j = quaternion_j();
  return conjugate_by(j, e) == f && conjugate_by(j, f) == e && conjugate_by(j, h) == negate(h);
}

bool quaternion_images_conjugate() {
  const auto group = binary_octahedral_group();
  const std::array<Matrix2, 3> xs{quaternion_i(), quaternion_j(), quaternion_k()};
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      bool found = false;
      for (const auto& g : group) {
        const Matrix2 c = conjugate_by(g, x);
        if (c == y || c == negate(y)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

ScalarAction scalar_action(Generator g, const lattice::ScaledLattice& n, const lattice::IntVector& u) {
  if (n.scale() != 2) throw std::invalid_argument("expected a lattice in the sqrt(2) frame");
  if (!n.contains(u)) throw std::invalid_argument("momentum is not in the lattice");
  std::int64_t sum = 0;
  for (auto v : u) sum += v;
  switch (g) {
    case Generator::I:
      return {true, frac_part(make_rational(sum, 4)), "prod_a i^(x_a)"};
    case Generator::MinusOne:
      return {true, frac_part(make_rational(sum, 2)), "prod_a (-1)^(x_a)"};
    case Generator::J:
    case Generator::K:
      return {false, Rational(0), "momentum u -> -u"};
  }
  throw std::invalid_argument("unknown generator");
}

lattice::ScaledLattice kernel_of_i_action(const lattice::ScaledLattice& n) {
  if (n.scale() != 2) throw std::invalid_argument("expected a lattice in the sqrt(2) frame");
  // (sum x) / 4 is integral iff (sum x) / 2 is even; sum x is even on N.
  return lattice::kernel_of_character(n, lattice::IntVector(static_cast<std::size_t>(n.rank()), 1), 2, 2);
}

codes::BinaryCode torus_trivial_subgroup(const codes::BinaryCode& code) {
  const auto n = lattice::niemeier_a1_24(code);
  std::vector<codes::Word> images;
  for (const auto& row : n.basis()) {
    codes::Word w = 0;
    for (std::size_t a = 0; a < row.size(); ++a) {
      if (row[a] % 2 != 0) w |= codes::Word{1} << a;
    }
    images.push_back(w);
  }
  return codes::dual_code(codes::BinaryCode(codes::kGolayLength, images));
}

}  // namespace vnat::octahedral
