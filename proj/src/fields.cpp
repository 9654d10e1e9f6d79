#include "vnat/fields.hpp"

#include <map>

namespace vnat::fock {

namespace {

Rational sign(std::int64_t e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

Rational binom(std::int64_t m, std::int64_t i) { return Rational(binomial(m, i)); }

class IdentityField final : public FieldNode {
 public:
  explicit IdentityField(int rank) : FieldNode(rank, 0, "I") {}

 protected:
  bool compute_available(int, int) const override { return true; }
  FockState compute(int n, const Monomial& m) const override {
    if (n != -1) return FockState(rank());
    return FockState::basis(rank(), m);
  }
};

class GeneratorField final : public FieldNode {
 public:
  GeneratorField(int rank, int color, const FieldLimits& limits)
      : FieldNode(rank, 1, "Y(e" + std::to_string(color) + "(-1)v0)"), color_(color), limits_(limits) {
    if (color < 1 || color > rank) throw std::invalid_argument("color out of range");
  }

 protected:
  bool compute_available(int n, int t) const override {
    return n >= limits_.mode_lo && n <= limits_.mode_hi && t <= limits_.cutoff;
  }
  FockState compute(int n, const Monomial& m) const override {
    return apply_mode(color_, n, FockState::basis(rank(), m));
  }

 private:
  int color_;
  FieldLimits limits_;
};

class ResidueProductField final : public FieldNode {
 public:
  ResidueProductField(Field a, Field b, int m)
      : FieldNode(a->rank(), a->require_weight() + b->require_weight() - m - 1,
                  "(" + a->description() + ")_" + std::to_string(m) + "(" + b->description() + ")"),
        a_(std::move(a)),
        b_(std::move(b)),
        m_(m) {
    if (a_->rank() != b_->rank()) throw std::invalid_argument("rank mismatch");
  }

 protected:
  // Walks the index sets of both i-sums, visiting only terms that are not zero by
  // grading. visit1(i, tB) covers A_{m-i} B_{n+i}; visit2(i, tA) covers B_{m+n-i} A_i.
  template <typename F1, typename F2>
  void for_each_term(int n, int t, F1&& visit1, F2&& visit2) const {
    const int wa = a_->require_weight();
    const int wb = b_->require_weight();
    for (int i = 0; m_ < 0 || i <= m_; ++i) {
      const int tb = t + wb - (n + i) - 1;
      if (tb < 0) break;
      if (!visit1(i, tb)) return;
    }
    for (int i = 0; m_ < 0 || i <= m_; ++i) {
      const int ta = t + wa - i - 1;
      if (ta < 0) break;
      if (!visit2(i, ta)) return;
    }
  }

  bool compute_available(int n, int t) const override {
    if (t + require_weight() - n - 1 < 0) return true;
    bool ok = true;
    for_each_term(
        n, t,
        [&](int i, int tb) { return ok = b_->available(n + i, t) && a_->available(m_ - i, tb); },
        [&](int i, int ta) { return ok = a_->available(i, t) && b_->available(m_ + n - i, ta); });
    return ok;
  }

  FockState compute(int n, const Monomial& mono) const override {
    const int t = degree(mono);
    FockState out(rank());
    if (t + require_weight() - n - 1 < 0) return out;
    const FockState s = FockState::basis(rank(), mono);
    const Rational tail_sign = -sign(m_);
    for_each_term(
        n, t,
        [&](int i, int) {
          const FockState inner = b_->apply(n + i, s);
          if (!inner.is_zero()) out += (sign(i) * binom(m_, i)) * a_->apply(m_ - i, inner);
          return true;
        },
        [&](int i, int) {
          const FockState inner = a_->apply(i, s);
          if (!inner.is_zero()) out += (tail_sign * sign(i) * binom(m_, i)) * b_->apply(m_ + n - i, inner);
          return true;
        });
    return out;
  }

 private:
  Field a_;
  Field b_;
  int m_;
};

std::optional<int> common_weight(const std::vector<std::pair<Rational, Field>>& terms) {
  std::optional<int> w;
  for (const auto& [c, f] : terms) {
    if (!f->weight()) return std::nullopt;
    if (w && *w != *f->weight()) return std::nullopt;
    w = f->weight();
  }
  return w;
}

std::string describe_terms(const std::vector<std::pair<Rational, Field>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [c, f] : terms) {
    if (!out.empty()) out += " + ";
    out += vnat::to_string(c) + "*" + f->description();
  }
  return out;
}

class LinearCombinationField final : public FieldNode {
 public:
  LinearCombinationField(std::vector<std::pair<Rational, Field>> terms, int rank)
      : FieldNode(rank, common_weight(terms), describe_terms(terms)), terms_(std::move(terms)) {
    for (const auto& [c, f] : terms_) {
      if (f->rank() != rank) throw std::invalid_argument("rank mismatch");
    }
  }

 protected:
  bool compute_available(int n, int t) const override {
    for (const auto& [c, f] : terms_) {
      if (!f->available(n, t)) return false;
    }
    return true;
  }
  FockState compute(int n, const Monomial& m) const override {
    const FockState s = FockState::basis(rank(), m);
    FockState out(rank());
    for (const auto& [c, f] : terms_) out += c * f->apply(n, s);
    return out;
  }

 private:
  std::vector<std::pair<Rational, Field>> terms_;
};

}  // namespace

FieldNode::FieldNode(int rank, std::optional<int> weight, std::string description)
    : rank_(rank), weight_(weight), description_(std::move(description)) {
  if (rank <= 0) throw std::invalid_argument("rank must be positive");
}

int FieldNode::require_weight() const {
  if (!weight_) throw std::invalid_argument("field " + description_ + " is not homogeneous");
  return *weight_;
}

bool FieldNode::available(int n, int t) const {
  const std::pair<int, int> key{n, t};
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = available_cache_.find(key);
    if (it != available_cache_.end()) return it->second;
  }
  const bool ok = compute_available(n, t);
  std::lock_guard<std::mutex> lock(mutex_);
  available_cache_.emplace(key, ok);
  return ok;
}

FockState FieldNode::apply(int n, const FockState& s) const {
  if (s.rank() != rank_) throw std::invalid_argument("rank mismatch");
  FockState out(rank_);
  for (const auto& [m, c] : s.terms()) {
    const int t = degree(m);
    if (!available(n, t)) {
      throw WindowExhausted("mode " + std::to_string(n) + " of " + description_ + " on degree " +
                            std::to_string(t) + " is outside the validity window");
    }
    std::pair<int, Monomial> key{n, m};
    std::optional<FockState> value;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = value_cache_.find(key);
      if (it != value_cache_.end()) value = it->second;
    }
    if (!value) {
      value = compute(n, m);
      std::lock_guard<std::mutex> lock(mutex_);
      value_cache_.emplace(std::move(key), *value);
    }
    out += c * *value;
  }
  return out;
}

Field identity_field(int rank) { return std::make_shared<IdentityField>(rank); }

Field generator_field(int rank, int color, const FieldLimits& limits) {
  return std::make_shared<GeneratorField>(rank, color, limits);
}

Field residue_product(const Field& a, const Field& b, int m) {
  return std::make_shared<ResidueProductField>(a, b, m);
}

Field linear_combination(const std::vector<std::pair<Rational, Field>>& terms, int rank) {
  return std::make_shared<LinearCombinationField>(terms, rank);
}

Field vertex_operator(const FockState& s, const FieldLimits& limits) {
  const int rank = s.rank();
  std::vector<Field> generators;
  for (int c = 1; c <= rank; ++c) generators.push_back(generator_field(rank, c, limits));
  const Field identity = identity_field(rank);
  std::vector<std::pair<Rational, Field>> terms;
  for (const auto& [mono, coeff] : s.terms()) {
    Field f = identity;
    for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
      f = residue_product(generators[static_cast<std::size_t>(it->color - 1)], f, it->mode);
    }
    terms.emplace_back(coeff, f);
  }
  if (terms.size() == 1 && terms.front().first == 1) return terms.front().second;
  return linear_combination(terms, rank);
}

Field virasoro_field(int rank, const FieldLimits& limits) {
  std::vector<std::pair<Rational, Field>> terms;
  for (int c = 1; c <= rank; ++c) {
    const Field g = generator_field(rank, c, limits);
    terms.emplace_back(make_rational(1, 2), residue_product(g, g, -1));
  }
  return linear_combination(terms, rank);
}

FockState translation(const FockState& w, const FieldLimits& limits) {
  if (w.is_zero()) return w;
  return vertex_operator(w, limits)->apply(-2, FockState::vacuum(w.rank()));
}

std::optional<std::size_t> compare_fields(const Field& a, const Field& b, int max_degree, int mode_lo,
                                          int mode_hi) {
  std::size_t compared = 0;
  for (const auto& m : monomials_up_to(a->rank(), max_degree)) {
    const int t = degree(m);
    const FockState s = FockState::basis(a->rank(), m);
    for (int n = mode_lo; n <= mode_hi; ++n) {
      if (!a->available(n, t) || !b->available(n, t)) continue;
      if (a->apply(n, s) != b->apply(n, s)) return std::nullopt;
      ++compared;
    }
  }
  return compared;
}

std::optional<int> locality_order(const Field& a, const Field& b, int n_max, int max_degree, int mode_bound) {
  const int wa = a->require_weight();
  const int wb = b->require_weight();
  const auto basis = monomials_up_to(a->rank(), max_degree);
  // x_{k} y_{l} s is evaluable when y_l is available on s and x_k on the result.
  auto evaluable = [](const Field& x, int k, const Field& y, int l, int wy, int t) {
    if (!y->available(l, t)) return false;
    const int ty = t + wy - l - 1;
    return ty < 0 || x->available(k, ty);
  };
  for (int order = 0; order <= n_max; ++order) {
    bool holds = true;
    std::size_t tested = 0;
    for (const auto& m : basis) {
      const int t = degree(m);
      const FockState s = FockState::basis(a->rank(), m);
      for (int p = -mode_bound; p <= mode_bound && holds; ++p) {
        for (int q = -mode_bound; q <= mode_bound && holds; ++q) {
          if (t + wa + wb - p - q - order - 2 < 0) continue;
          bool ok = true;
          for (int k = 0; k <= order && ok; ++k) {
            ok = evaluable(a, p + order - k, b, q + k, wb, t) && evaluable(b, q + k, a, p + order - k, wa, t);
          }
          if (!ok) continue;
          FockState total(a->rank());
          for (int k = 0; k <= order; ++k) {
            const int pk = p + order - k;
            const int qk = q + k;
            const FockState comm = a->apply(pk, b->apply(qk, s)) - b->apply(qk, a->apply(pk, s));
            total += (sign(k) * binom(order, k)) * comm;
          }
          ++tested;
          if (!total.is_zero()) holds = false;
        }
      }
      if (!holds) break;
    }
    if (holds && tested == 0) {
      throw WindowExhausted("no mode pair can be tested for locality within the given bounds");
    }
    if (holds) return order;
  }
  return std::nullopt;
}

BorcherdsOutcome check_borcherds(const BorcherdsInstance& in, int span) {
  const int rank = in.a->rank();
  const int wa = in.a->require_weight();
  const int wb = in.b->require_weight();
  const int wc = in.c->require_weight();
  const int p = in.p;
  const int q = in.q;
  const int r = in.r;
  // Residue products of negative weight vanish, which bounds the infinite i-sums.
  std::vector<std::pair<Rational, Field>> lhs;
  for (int i = 0; (p < 0 || i <= p) && wa + wb - (r + i) - 1 >= 0; ++i) {
    lhs.emplace_back(binom(p, i), residue_product(residue_product(in.a, in.b, r + i), in.c, p + q - i));
  }
  std::vector<std::pair<Rational, Field>> rhs;
  for (int i = 0; r < 0 || i <= r; ++i) {
    const bool first = wb + wc - (q + i) - 1 >= 0;
    const bool second = wa + wc - (p + i) - 1 >= 0;
    if (!first && !second) break;
    const Rational c = sign(i) * binom(r, i);
    if (first) rhs.emplace_back(c, residue_product(in.a, residue_product(in.b, in.c, q + i), p + r - i));
    if (second) {
      rhs.emplace_back(-sign(r) * c, residue_product(in.b, residue_product(in.a, in.c, p + i), q + r - i));
    }
  }
  const Field left = linear_combination(lhs, rank);
  const Field right = linear_combination(rhs, rank);
  const int w = wa + wb + wc - p - q - r - 2;
  BorcherdsOutcome outcome;
  outcome.holds = true;
  for (const auto& [mono, coeff] : in.state.terms()) {
    const int t = degree(mono);
    const FockState s = FockState::basis(rank, mono);
    const int top = t + w - 1;
    for (int n = top - span; n <= top; ++n) {
      ++outcome.modes_compared;
      if (left->apply(n, s) != right->apply(n, s)) {
        outcome.holds = false;
        return outcome;
      }
    }
  }
  return outcome;
}

bool check_virasoro(int m, int n, const FockState& s, const FieldLimits& limits) {
  const int d = s.rank();
  const Field t = virasoro_field(d, limits);
  auto L = [&](int k, const FockState& x) { return t->apply(k + 1, x); };
  const FockState lhs = L(m, L(n, s)) - L(n, L(m, s));
  FockState rhs = Rational(m - n) * L(m + n, s);
  if (m == -n) rhs += (binom(m + 1, 3) * make_rational(d, 2)) * s;
  return lhs == rhs;
}

bool check_skew_symmetry(const FockState& u, const FockState& v, int n, const FieldLimits& limits) {
  const FockState lhs = vertex_operator(v, limits)->apply(n, u);
  const Field yu = vertex_operator(u, limits);
  FockState rhs(u.rank());
  Rational factorial = 1;
  const int k_max = u.max_degree() + v.max_degree() - n - 1;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) factorial *= k;
    FockState term = yu->apply(n + k, v);
    for (int j = 0; j < k && !term.is_zero(); ++j) term = translation(term, limits);
    rhs += (sign(n + k + 1) / factorial) * term;
  }
  return lhs == rhs;
}

bool check_commutator_formula(const Field& a, const Field& b, int p, int q, const FockState& s) {
  const FockState lhs = a->apply(p, b->apply(q, s)) - b->apply(q, a->apply(p, s));
  FockState rhs(s.rank());
  const int wa = a->require_weight();
  const int wb = b->require_weight();
  for (int i = 0; (p < 0 || i <= p) && wa + wb - i - 1 >= 0; ++i) {
    rhs += binom(p, i) * residue_product(a, b, i)->apply(p + q - i, s);
  }
  return lhs == rhs;
}

}  // namespace vnat::fock
