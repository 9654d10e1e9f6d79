#include "vnat/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace vnat::fock {

Monomial make_monomial(std::vector<Creation> ops, int rank) {
  for (const auto& op : ops) {
    if (op.mode >= 0) throw std::invalid_argument("basis monomials contain only negative modes");
    if (op.color < 1 || op.color > rank) throw std::invalid_argument("color out of range");
  }
  std::sort(ops.begin(), ops.end());
  return ops;
}

int degree(const Monomial& m) {
  int d = 0;
  for (const auto& op : m) d -= op.mode;
  return d;
}

FockState::FockState(int rank) : rank_(rank) {
  if (rank <= 0) throw std::invalid_argument("rank must be positive");
}

FockState::FockState(int rank, Terms terms) : FockState(rank) {
  for (auto& [m, c] : terms) add(m, c);
}

FockState FockState::vacuum(int rank) { return basis(rank, {}); }

FockState FockState::basis(int rank, const Monomial& m) {
  FockState s(rank);
  s.add(make_monomial(m, rank), Rational(1));
  return s;
}

std::optional<int> FockState::homogeneous_degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    const int dm = degree(m);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

int FockState::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree(m));
  return d;
}

void FockState::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

FockState& FockState::operator+=(const FockState& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("rank mismatch");
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& other) {
  if (other.rank_ != rank_) throw std::invalid_argument("rank mismatch");
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

FockState operator+(FockState a, const FockState& b) { return a += b; }
FockState operator-(FockState a, const FockState& b) { return a -= b; }

FockState operator*(const Rational& c, const FockState& s) {
  FockState out(s.rank());
  if (c == 0) return out;
  for (const auto& [m, v] : s.terms()) out.add(m, c * v);
  return out;
}

FockState apply_mode(int color, int n, const FockState& s) {
  if (color < 1 || color > s.rank()) throw std::invalid_argument("color out of range");
  FockState out(s.rank());
  if (n == 0) return out;
  const Creation target{n < 0 ? n : -n, color};
  for (const auto& [m, c] : s.terms()) {
    Monomial next = m;
    if (n < 0) {
      next.insert(std::upper_bound(next.begin(), next.end(), target), target);
      out.add(next, c);
      continue;
    }
    const auto range = std::equal_range(next.begin(), next.end(), target);
    const auto multiplicity = range.second - range.first;
    if (multiplicity == 0) continue;
    next.erase(range.first);
    out.add(next, c * n * static_cast<long>(multiplicity));
  }
  return out;
}

std::vector<Monomial> monomials_of_degree(int rank, int t) {
  std::vector<Monomial> out;
  if (t < 0) return out;
  Monomial current;
  // Generate (mode, color) pairs in nondecreasing canonical order.
  std::function<void(int, Creation)> extend = [&](int remaining, Creation floor) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int mode = std::max(floor.mode, -remaining); mode <= -1; ++mode) {
      const int first_color = (mode == floor.mode) ? floor.color : 1;
      for (int color = first_color; color <= rank; ++color) {
        current.push_back({mode, color});
        extend(remaining + mode, {mode, color});
        current.pop_back();
      }
    }
  };
  extend(t, {-t, 1});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_up_to(int rank, int max_degree) {
  std::vector<Monomial> out;
  for (int t = 0; t <= max_degree; ++t) {
    auto part = monomials_of_degree(rank, t);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Integer graded_dimension(int rank, int n) {
  if (rank <= 0) throw std::invalid_argument("rank must be positive");
  if (n < 0) return 0;
  // Each (part size, color) is an independent unbounded item.
  std::vector<Integer> ways(static_cast<std::size_t>(n) + 1, Integer(0));
  ways[0] = 1;
  for (int k = 1; k <= n; ++k) {
    for (int c = 0; c < rank; ++c) {
      for (int j = k; j <= n; ++j) ways[static_cast<std::size_t>(j)] += ways[static_cast<std::size_t>(j - k)];
    }
  }
  return ways[static_cast<std::size_t>(n)];
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "v0";
  std::ostringstream out;
  for (const auto& op : m) out << "e" << op.color << "(" << op.mode << ")";
  out << "v0";
  return out.str();
}

std::string to_string(const FockState& s) {
  if (s.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << vnat::to_string(c) << "*";
    out << to_string(m);
  }
  return out.str();
}

}  // namespace vnat::fock
