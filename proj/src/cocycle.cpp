#include "vnat/cocycle.hpp"

#include <random>
#include <stdexcept>

namespace vnat::cocycle {

namespace {

int mod2(const Integer& z) { return mpz_odd_p(z.get_mpz_t()) ? 1 : 0; }

int mod2(std::int64_t v) { return static_cast<int>(((v % 2) + 2) % 2); }

lattice::IntVector random_coefficients(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> dist(-3, 3);
  lattice::IntVector c(n);
  for (auto& v : c) v = dist(rng);
  return c;
}

lattice::IntVector add(const lattice::IntVector& a, const lattice::IntVector& b) {
  lattice::IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// (-1)^(x, y) from the lattice vectors themselves.
int pairing_sign(const lattice::ScaledLattice& l, const lattice::IntVector& ca, const lattice::IntVector& cb,
                 bool& odd) {
  const Rational ip = lattice::inner_product(l.combine(ca), l.combine(cb), l.scale());
  if (!is_integer(ip)) throw std::logic_error("lattice is not integral");
  odd = mod2(ip.get_num()) == 1;
  return odd ? -1 : 1;
}

}  // namespace

LatticeCocycle::LatticeCocycle(lattice::ScaledLattice l) : lattice_(std::move(l)) {
  if (!lattice::is_even(lattice_)) throw std::invalid_argument("cocycle requires an even lattice");
  const auto g = lattice::gram_matrix(lattice_);
  const std::size_t n = g.size();
  lift_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    lift_[i][i] = mod2(Integer(g[i][i].get_num() / 2));
    for (std::size_t j = i + 1; j < n; ++j) lift_[i][j] = mod2(g[i][j].get_num());
  }
}

int LatticeCocycle::exponent(const lattice::IntVector& a, const lattice::IntVector& b) const {
  const std::size_t n = lift_.size();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("coefficient vector has wrong length");
  int e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mod2(a[i]) == 0) continue;
    for (std::size_t j = i; j < n; ++j) {
      if (lift_[i][j] && mod2(b[j])) e ^= 1;
    }
  }
  return e;
}

int LatticeCocycle::epsilon(const lattice::IntVector& a, const lattice::IntVector& b) const {
  return exponent(a, b) ? -1 : 1;
}

int LatticeCocycle::epsilon_of_vectors(const lattice::IntVector& x, const lattice::IntVector& y) const {
  const auto a = lattice_.coefficients(x);
  const auto b = lattice_.coefficients(y);
  if (!a || !b) throw std::invalid_argument("vector is not in the lattice");
  return epsilon(*a, *b);
}

CommutatorReport verify_commutator(const LatticeCocycle& c, std::size_t trials, std::uint64_t seed) {
  CommutatorReport report;
  const auto& l = c.base();
  const std::size_t n = static_cast<std::size_t>(l.rank());
  auto check = [&](const lattice::IntVector& a, const lattice::IntVector& b) {
    bool odd = false;
    const int expected = pairing_sign(l, a, b, odd);
    if (odd) ++report.odd_pairs;
    const int actual = c.epsilon(a, b) * c.epsilon(b, a);
    if (actual != expected && !report.failure) {
      report.holds = false;
      report.failure = "commutator sign " + std::to_string(actual) + " but (-1)^(a,b) = " + std::to_string(expected);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      lattice::IntVector a(n, 0);
      lattice::IntVector b(n, 0);
      a[i] = 1;
      b[j] = 1;
      check(a, b);
      ++report.basis_pairs;
    }
  }
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = random_coefficients(rng, n);
    const auto b = random_coefficients(rng, n);
    check(a, b);
    ++report.random_pairs;
  }
  return report;
}

bool verify_bimultiplicative(const LatticeCocycle& c, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = static_cast<std::size_t>(c.base().rank());
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const auto a = random_coefficients(rng, n);
    const auto b = random_coefficients(rng, n);
    const auto d = random_coefficients(rng, n);
    if (c.epsilon(add(a, b), d) != c.epsilon(a, d) * c.epsilon(b, d)) return false;
    if (c.epsilon(a, add(b, d)) != c.epsilon(a, b) * c.epsilon(a, d)) return false;
  }
  return true;
}

}  // namespace vnat::cocycle
