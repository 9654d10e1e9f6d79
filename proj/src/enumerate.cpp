#include "vnat/enumerate.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

namespace vnat::lattice {

namespace {

std::int64_t isqrt(std::int64_t v) {
  if (v <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::string describe_budget(double estimate, double budget) {
  std::ostringstream out;
  out << "enumeration budget exceeded: estimated " << estimate << " lattice points, budget " << budget
      << " (use the budget override to proceed)";
  return out.str();
}

// Depth-first descent over coefficient prefixes. Coordinate j of the vector is
// offset[j][j] + c_j * H[j][j], where offset collects the earlier rows.
template <typename Leaf>
class Descent {
 public:
  Descent(const IntMatrix& basis, std::int64_t bound, Leaf& leaf)
      : h_(basis), n_(basis.size()), bound_(bound), offset_(n_ + 1, IntVector(n_, 0)), x_(n_, 0), leaf_(leaf) {}

  // Range of c_0; the top level is split across workers by this coefficient.
  std::pair<std::int64_t, std::int64_t> top_range() const { return range(0, 0); }

  void run_top(std::int64_t c0) { step(0, 0, c0); }

 private:
  std::pair<std::int64_t, std::int64_t> range(std::size_t j, std::int64_t used) const {
    const std::int64_t r = isqrt(bound_ - used);
    const std::int64_t o = offset_[j][j];
    const std::int64_t p = h_[j][j];
    return {ceil_div(-r - o, p), floor_div(r - o, p)};
  }

  void step(std::size_t j, std::int64_t used, std::int64_t c) {
    const std::int64_t xj = offset_[j][j] + c * h_[j][j];
    const std::int64_t total = used + xj * xj;
    if (total > bound_) return;
    x_[j] = xj;
    if (j + 1 == n_) {
      leaf_(x_, total);
      return;
    }
    auto& next = offset_[j + 1];
    const auto& cur = offset_[j];
    const auto& row = h_[j];
    for (std::size_t k = j + 1; k < n_; ++k) next[k] = cur[k] + c * row[k];
    const auto [lo, hi] = range(j + 1, total);
    for (std::int64_t c2 = lo; c2 <= hi; ++c2) step(j + 1, total, c2);
  }

  const IntMatrix& h_;
  std::size_t n_;
  std::int64_t bound_;
  IntMatrix offset_;
  IntVector x_;
  Leaf& leaf_;
};

void check_budget(const ScaledLattice& lattice, std::int64_t bound, const EnumerationOptions& options) {
  if (options.budget_override) return;
  const double estimate = estimate_point_count(lattice, bound);
  if (estimate > options.budget) throw BudgetExceeded(estimate, options.budget);
}

unsigned worker_count(const EnumerationOptions& options) {
  unsigned t = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  return t == 0 ? 1 : t;
}

// Smallest positive value taken by x . x on the lattice divides this.
std::int64_t norm_gcd(const ScaledLattice& lattice) {
  const auto& b = lattice.basis();
  std::int64_t g = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    g = std::gcd(g, dot(b[i], b[i]));
    for (std::size_t j = i + 1; j < b.size(); ++j) g = std::gcd(g, 2 * dot(b[i], b[j]));
  }
  return g;
}

}  // namespace

BudgetExceeded::BudgetExceeded(double estimate, double budget)
    : std::runtime_error(describe_budget(estimate, budget)), estimate_(estimate), budget_(budget) {}

double estimate_point_count(const ScaledLattice& lattice, std::int64_t bound) {
  if (bound < 0) return 0;
  const double n = lattice.rank();
  double log_covolume = 0;
  for (int i = 0; i < lattice.rank(); ++i) {
    log_covolume += std::log(static_cast<double>(lattice.basis()[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]));
  }
  const double log_ball = (n / 2) * std::log(M_PI) - std::lgamma(n / 2 + 1) +
                          (n / 2) * std::log(static_cast<double>(bound));
  return std::exp(log_ball - log_covolume);
}

NormHistogram norm_histogram(const ScaledLattice& lattice, std::int64_t bound, const EnumerationOptions& options) {
  if (bound < 0) return {};
  check_budget(lattice, bound, options);
  const unsigned workers = worker_count(options);
  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(static_cast<std::size_t>(bound) + 1, 0));
  auto work = [&](unsigned w) {
    auto& hist = partial[w];
    auto leaf = [&hist](const IntVector&, std::int64_t total) { ++hist[static_cast<std::size_t>(total)]; };
    Descent<decltype(leaf)> descent(lattice.basis(), bound, leaf);
    const auto [lo, hi] = descent.top_range();
    for (std::int64_t c = lo; c <= hi; ++c) {
      if (static_cast<std::uint64_t>(c - lo) % workers == w) descent.run_top(c);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  NormHistogram out;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(bound); ++k) {
    std::uint64_t total = 0;
    for (const auto& p : partial) total += p[k];
    if (total != 0) out[static_cast<std::int64_t>(k)] = total;
  }
  return out;
}

void for_each_short_vector(const ScaledLattice& lattice, std::int64_t bound,
                           const std::function<void(const IntVector&)>& f, const EnumerationOptions& options) {
  if (bound < 0) return;
  check_budget(lattice, bound, options);
  auto leaf = [&f](const IntVector& x, std::int64_t) { f(x); };
  Descent<decltype(leaf)> descent(lattice.basis(), bound, leaf);
  const auto [lo, hi] = descent.top_range();
  for (std::int64_t c = lo; c <= hi; ++c) descent.run_top(c);
}

NormHistogram fincke_pohst_histogram(const ScaledLattice& lattice, std::int64_t bound) {
  if (bound < 0) return {};
  const std::size_t n = static_cast<std::size_t>(lattice.rank());
  // Cholesky-style decomposition Q(c) = sum q_ii (c_i + sum_{j>i} q_ij c_j)^2 of the
  // Gram form in the unscaled frame multiplied back by the scale.
  RationalMatrix q(n, std::vector<Rational>(n));
  const auto& b = lattice.basis();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q[i][j] = make_rational(dot(b[i], b[j]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q[j][i] = q[i][j];
      q[i][j] /= q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
    }
  }
  NormHistogram out;
  IntVector c(n, 0);
  const Rational total_bound = make_rational(bound);
  std::function<void(std::size_t, const Rational&)> descend = [&](std::size_t i, const Rational& remaining) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n; ++j) center -= q[i][j] * Rational(Integer(static_cast<long>(c[j])));
    const Integer radius_sq = floor(remaining / q[i][i]);
    Integer r;
    mpz_sqrt(r.get_mpz_t(), radius_sq.get_mpz_t());
    const std::int64_t lo = to_int64(floor(center)) - to_int64(r) - 1;
    const std::int64_t hi = to_int64(ceil(center)) + to_int64(r) + 1;
    for (std::int64_t v = lo; v <= hi; ++v) {
      const Rational d = Rational(Integer(static_cast<long>(v))) - center;
      const Rational used = q[i][i] * d * d;
      if (used > remaining) continue;
      c[i] = v;
      if (i == 0) {
        const IntVector x = lattice.combine(c);
        ++out[dot(x, x)];
      } else {
        descend(i - 1, remaining - used);
      }
    }
    c[i] = 0;
  };
  descend(n - 1, total_bound);
  return out;
}

std::uint64_t count_vectors_of_norm(const ScaledLattice& lattice, const Rational& norm,
                                    const EnumerationOptions& options) {
  if (norm < 0) throw std::invalid_argument("norm must be nonnegative");
  const Rational scaled = norm * Rational(Integer(static_cast<long>(lattice.scale())));
  if (!is_integer(scaled)) return 0;
  const std::int64_t key = to_int64(scaled.get_num());
  const auto hist = norm_histogram(lattice, key, options);
  auto it = hist.find(key);
  return it == hist.end() ? 0 : it->second;
}

qseries::FracQSeries theta_series(const ScaledLattice& lattice, std::int64_t nmax,
                                  const EnumerationOptions& options) {
  if (nmax < 0) throw std::invalid_argument("nmax must be nonnegative");
  const std::int64_t two_s = 2 * lattice.scale();
  const std::int64_t denom = two_s / std::gcd(two_s, norm_gcd(lattice));
  const auto hist = norm_histogram(lattice, two_s * nmax, options);
  qseries::FracQSeries::Coefficients coeffs;
  for (const auto& [key, count] : hist) {
    coeffs.emplace(key * denom / two_s, Rational(Integer(static_cast<unsigned long>(count))));
  }
  return qseries::FracQSeries(denom, nmax * denom + 1, std::move(coeffs));
}

}  // namespace vnat::lattice
