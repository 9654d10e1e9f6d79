#include <random>

#include "doctest.h"
#include "vnat/fields.hpp"

using namespace vnat;
using namespace vnat::fock;

namespace {

constexpr FieldLimits kWide{-20, 20, 20};

// a(-z) for a generator a: A_n = (-1)^n e1(n). Mutually non-local with e1.
class ReflectedGenerator : public FieldNode {
 public:
  explicit ReflectedGenerator(int rank) : FieldNode(rank, 1, "e1(-z)"), base_(generator_field(rank, 1, kWide)) {}

 protected:
  bool compute_available(int n, int t) const override { return base_->available(n, t); }
  FockState compute(int n, const Monomial& m) const override {
    const FockState out = base_->apply(n, FockState::basis(rank(), m));
    return n % 2 == 0 ? out : Rational(-1) * out;
  }

 private:
  Field base_;
};

}  // namespace

TEST_CASE("generator fields and vertex operators agree") {
  const int rank = 2;
  const auto g1 = generator_field(rank, 1, kWide);
  const auto v0 = FockState::vacuum(rank);
  const auto e1 = apply_mode(1, -1, v0);
  CHECK(compare_fields(vertex_operator(e1, kWide), g1, 5, -6, 6).has_value());
  CHECK(compare_fields(vertex_operator(v0, kWide), identity_field(rank), 5, -6, 6).has_value());
  CHECK(translation(e1, kWide) == apply_mode(1, -2, v0));
  CHECK_FALSE(compare_fields(g1, generator_field(rank, 2, kWide), 3, -3, 3).has_value());
}

TEST_CASE("window limits are enforced") {
  const auto g = generator_field(1, 1, FieldLimits{-3, 3, 4});
  const auto s = FockState::vacuum(1);
  CHECK_NOTHROW(g->apply(-3, s));
  CHECK_THROWS_AS(g->apply(-4, s), WindowExhausted);
  CHECK_THROWS_AS(g->apply(1, apply_mode(1, -5, s)), WindowExhausted);
  CHECK_FALSE(g->available(4, 0));
}

TEST_CASE("locality orders") {
  const int rank = 2;
  const auto g1 = generator_field(rank, 1, kWide);
  const auto g2 = generator_field(rank, 2, kWide);
  CHECK(locality_order(g1, g1, 4, 3) == 2);
  CHECK(locality_order(g1, g2, 4, 3) == 0);
  CHECK(locality_order(identity_field(rank), g1, 4, 3) == 0);
  const auto w = virasoro_field(rank, kWide);
  CHECK(locality_order(w, w, 6, 3) == 4);
  CHECK(locality_order(w, g1, 6, 3) == 2);
  const Field fake = std::make_shared<ReflectedGenerator>(rank);
  CHECK(locality_order(fake, g1, 6, 3) == std::nullopt);
}

TEST_CASE("residue product unit laws") {
  const int rank = 2;
  const auto id = identity_field(rank);
  const auto zero = linear_combination({}, rank);
  const auto g1 = generator_field(rank, 1, kWide);
  const auto mixed = residue_product(g1, generator_field(rank, 2, kWide), -1);
  for (const auto& a : {g1, mixed}) {
    CHECK(compare_fields(residue_product(a, id, -1), a, 5, -6, 6).has_value());
    CHECK(compare_fields(residue_product(id, a, -1), a, 5, -6, 6).has_value());
    for (int n = 0; n <= 3; ++n) {
      CHECK(compare_fields(residue_product(a, id, n), zero, 5, -6, 6).has_value());
      CHECK(compare_fields(residue_product(id, a, n), zero, 5, -6, 6).has_value());
    }
  }
  CHECK(compare_fields(residue_product(g1, g1, 1), id, 5, -6, 6).has_value());
  CHECK(compare_fields(residue_product(g1, g1, 0), zero, 5, -6, 6).has_value());
  // (e1_(-2) I) is the derivative field: mode n is -n * e1(n - 1).
  const auto d = residue_product(g1, id, -2);
  const auto s = apply_mode(1, -2, FockState::vacuum(rank));
  for (int n = -3; n <= 3; ++n) CHECK(d->apply(n, s) == Rational(-n) * g1->apply(n - 1, s));
}

TEST_CASE("Borcherds identity on seeded instances") {
  const int rank = 2;
  const auto g1 = generator_field(rank, 1, kWide);
  const auto g2 = generator_field(rank, 2, kWide);
  const std::vector<Field> pool{identity_field(rank), g1, g2, residue_product(g1, g2, -1),
                                residue_product(g1, g1, -2), virasoro_field(rank, kWide)};
  const auto states = monomials_up_to(rank, 6);
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::size_t> f(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> st(0, states.size() - 1);
  std::uniform_int_distribution<int> idx(-2, 2);
  for (int i = 0; i < 150; ++i) {
    BorcherdsInstance inst{pool[f(rng)], pool[f(rng)], pool[f(rng)], idx(rng), idx(rng), idx(rng),
                           FockState::basis(rank, states[st(rng)])};
    const auto out = check_borcherds(inst);
    CHECK(out.holds);
    CHECK(out.modes_compared > 0);
  }
}

TEST_CASE("Borcherds identity fails for a non-local field") {
  const int rank = 2;
  const Field fake = std::make_shared<ReflectedGenerator>(rank);
  const auto g1 = generator_field(rank, 1, kWide);
  const auto id = identity_field(rank);
  int failures = 0;
  for (int p = -2; p <= 2; ++p) {
    for (int q = -2; q <= 2; ++q) {
      for (int r = -2; r <= 2; ++r) {
        BorcherdsInstance inst{fake, g1, id, p, q, r, FockState::basis(rank, make_monomial({{-1, 1}}, rank))};
        if (!check_borcherds(inst).holds) ++failures;
      }
    }
  }
  CHECK(failures > 0);
}

TEST_CASE("Virasoro relations") {
  for (int rank : {1, 2, 3}) {
    const FieldLimits lim{-20, 20, 20};
    for (const auto& m : monomials_up_to(rank, 4)) {
      const auto s = FockState::basis(rank, m);
      for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) CHECK(check_virasoro(a, b, s, lim));
      }
    }
    const auto l = virasoro_field(rank, lim);
    const auto v0 = FockState::vacuum(rank);
    const auto central = l->apply(3, l->apply(-1, v0)) - l->apply(-1, l->apply(3, v0));
    CHECK(central == make_rational(rank, 2) * v0);
    // L_0 is the degree and L_-1 is translation.
    for (const auto& m : monomials_up_to(rank, 4)) {
      const auto s = FockState::basis(rank, m);
      CHECK(l->apply(1, s) == Rational(degree(m)) * s);
      CHECK(l->apply(0, s) == translation(s, lim));
    }
  }
}

TEST_CASE("skew symmetry and the commutator formula") {
  const int rank = 2;
  const auto u = FockState::basis(rank, make_monomial({{-1, 1}, {-1, 2}}, rank));
  const auto v = FockState::basis(rank, make_monomial({{-2, 1}}, rank));
  for (int n = -3; n <= 3; ++n) CHECK(check_skew_symmetry(u, v, n, kWide));
  const auto g1 = generator_field(rank, 1, kWide);
  const auto a = residue_product(g1, generator_field(rank, 2, kWide), -1);
  const auto s = FockState::basis(rank, make_monomial({{-2, 1}, {-1, 2}}, rank));
  for (int p = -3; p <= 3; ++p) {
    for (int q = -3; q <= 3; ++q) CHECK(check_commutator_formula(a, g1, p, q, s));
  }
}
