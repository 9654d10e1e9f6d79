#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "vnat/lattice.hpp"
#include "vnat/qseries.hpp"

namespace vnat::lattice {

// Default cap on the estimated number of lattice points visited. Allows norm 6 in
// rank 24 and refuses norm 8 unless overridden.
inline constexpr double kDefaultEnumerationBudget = 5e7;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(double estimate, double budget);
  double estimate() const { return estimate_; }
  double budget() const { return budget_; }

 private:
  double estimate_;
  double budget_;
};

struct EnumerationOptions {
  double budget = kDefaultEnumerationBudget;
  bool budget_override = false;
  // Worker threads; 0 means hardware concurrency. Results do not depend on it.
  unsigned threads = 1;
};

// Gaussian-heuristic estimate of #{x in L : x . x <= bound} (scaled coordinates).
double estimate_point_count(const ScaledLattice& lattice, std::int64_t bound);

// Histogram of x . x over all lattice vectors with x . x <= bound, in scaled
// coordinates (so the norm of an entry is key / scale). Includes the zero vector.
// Coordinate descent over the triangular basis: coordinate j depends only on the
// first j + 1 coefficients, so every partial sum of squares prunes exactly.
using NormHistogram = std::map<std::int64_t, std::uint64_t>;
NormHistogram norm_histogram(const ScaledLattice& lattice, std::int64_t bound,
                             const EnumerationOptions& options = {});

// The same histogram by Fincke-Pohst over the exact rational Gram matrix. Slower;
// used as an independent route on small inputs.
NormHistogram fincke_pohst_histogram(const ScaledLattice& lattice, std::int64_t bound);

// Calls f(x) for every lattice vector with x . x <= bound, in enumeration order.
void for_each_short_vector(const ScaledLattice& lattice, std::int64_t bound,
                           const std::function<void(const IntVector&)>& f,
                           const EnumerationOptions& options = {});

// Number of vectors of the given norm (x . x = norm * scale).
std::uint64_t count_vectors_of_norm(const ScaledLattice& lattice, const Rational& norm,
                                    const EnumerationOptions& options = {});

// sum over a in L of q^((a,a)/2) for exponents up to nmax, known below q^(nmax + 1/N).
qseries::FracQSeries theta_series(const ScaledLattice& lattice, std::int64_t nmax,
                                  const EnumerationOptions& options = {});

}  // namespace vnat::lattice
