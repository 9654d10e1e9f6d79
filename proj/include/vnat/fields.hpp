#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vnat/fock.hpp"

namespace vnat::fock {

// A mode or degree outside the validity region of a truncated field was needed.
class WindowExhausted : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Validity region of generator fields: modes in [mode_lo, mode_hi] acting on
// states of degree at most cutoff.
struct FieldLimits {
  int mode_lo = -10;
  int mode_hi = 10;
  int cutoff = 8;
};

class FieldNode;
using Field = std::shared_ptr<const FieldNode>;

// A field A(z) = sum A_n z^(-n-1) on the Fock space, evaluated mode by mode. For a
// homogeneous field of weight w, A_n maps degree t to degree t + w - n - 1.
// Results are memoized per (mode, monomial); the cache is internally locked.
class FieldNode {
 public:
  FieldNode(int rank, std::optional<int> weight, std::string description);
  virtual ~FieldNode() = default;
  FieldNode(const FieldNode&) = delete;
  FieldNode& operator=(const FieldNode&) = delete;

  int rank() const { return rank_; }
  std::optional<int> weight() const { return weight_; }
  int require_weight() const;
  const std::string& description() const { return description_; }

  // Whether A_n can be evaluated on states of degree t.
  bool available(int n, int t) const;
  // A_n s; throws WindowExhausted outside the validity region.
  FockState apply(int n, const FockState& s) const;

 protected:
  virtual bool compute_available(int n, int t) const = 0;
  virtual FockState compute(int n, const Monomial& m) const = 0;

 private:
  int rank_;
  std::optional<int> weight_;
  std::string description_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, bool> available_cache_;
  mutable std::map<std::pair<int, Monomial>, FockState> value_cache_;
};

Field identity_field(int rank);
Field generator_field(int rank, int color, const FieldLimits& limits = {});
// (A_m B)_n = sum_{i>=0} (-1)^i C(m,i) (A_{m-i} B_{n+i} - (-1)^m B_{m+n-i} A_i).
// Both inputs must be homogeneous; the i-sums are finite on each graded piece.
Field residue_product(const Field& a, const Field& b, int m);
Field linear_combination(const std::vector<std::pair<Rational, Field>>& terms, int rank);
// Y(s, z) by reconstruction: Y(u_n v) = Y(u)_n Y(v), Y(v0) = I.
Field vertex_operator(const FockState& s, const FieldLimits& limits = {});
// Y(omega, z) with omega = 1/2 sum_i (e^i t^-1)^2 v0; L_m is its mode m + 1.
Field virasoro_field(int rank, const FieldLimits& limits = {});

// Translation T w = w_{-2} v0.
FockState translation(const FockState& w, const FieldLimits& limits = {});

// Compares A_n s and B_n s over all basis states of degree <= max_degree and the
// modes n in [mode_lo, mode_hi] available to both. Returns the number of
// comparisons made, or nullopt at the first mismatch.
std::optional<std::size_t> compare_fields(const Field& a, const Field& b, int max_degree, int mode_lo,
                                          int mode_hi);

// Smallest N <= n_max with (z - w)^N [A(z), B(w)] = 0 on basis states of degree
// <= max_degree, over the mode pairs in [-mode_bound, mode_bound]^2 where every
// needed mode is available. Throws WindowExhausted if no pair can be tested.
std::optional<int> locality_order(const Field& a, const Field& b, int n_max, int max_degree,
                                  int mode_bound = 10);

struct BorcherdsInstance {
  Field a;
  Field b;
  Field c;
  int p;
  int q;
  int r;
  FockState state;
};

struct BorcherdsOutcome {
  bool holds = false;
  // Number of output modes compared.
  int modes_compared = 0;
};

// Both sides of
//   sum_i C(p,i) (A_{r+i} B)_{p+q-i} C
//     = sum_i (-1)^i C(r,i) (A_{p+r-i} (B_{q+i} C) - (-1)^r B_{q+r-i} (A_{p+i} C))
// as fields, compared on the state for every output mode whose result has degree
// in [0, span] above the lowest possible one.
BorcherdsOutcome check_borcherds(const BorcherdsInstance& instance, int span = 2);

// [L_m, L_n] s = (m - n) L_{m+n} s + C(m+1, 3) delta_{m,-n} (d/2) s.
bool check_virasoro(int m, int n, const FockState& s, const FieldLimits& limits = {});

// v_n u = sum_k (-1)^(n+k+1) T^k (u_{n+k} v) / k!.
bool check_skew_symmetry(const FockState& u, const FockState& v, int n, const FieldLimits& limits = {});

// [A_p, B_q] s = sum_{i>=0} C(p,i) (A_i B)_{p+q-i} s.
bool check_commutator_formula(const Field& a, const Field& b, int p, int q, const FockState& s);

}  // namespace vnat::fock
