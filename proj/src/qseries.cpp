#include "vnat/qseries.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

namespace vnat::qseries {

namespace {

std::atomic<std::int64_t> g_max_denominator{kDefaultMaxDenominator};

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("series exponent overflow");
  return static_cast<std::int64_t>(v);
}

void check_denominator(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("series denominator must be positive");
  if (n > g_max_denominator.load()) {
    throw DenominatorOverflow("exponent denominator " + std::to_string(n) + " exceeds the maximum " +
                              std::to_string(g_max_denominator.load()));
  }
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  const std::int64_t l = std::lcm(a, b);
  check_denominator(l);
  return l;
}

// Divides denom, trunc and every key by their common factor.
FracQSeries reduce(const FracQSeries& s) {
  std::int64_t g = std::gcd(s.denom(), s.trunc());
  for (const auto& [k, c] : s.coeffs()) {
    if (g == 1) break;
    g = std::gcd(g, k);
  }
  if (g <= 1) return s;
  FracQSeries::Coefficients out;
  for (const auto& [k, c] : s.coeffs()) out.emplace(k / g, c);
  return FracQSeries(s.denom() / g, s.trunc() / g, std::move(out));
}

std::int64_t leading_key_or_trunc(const FracQSeries& s) {
  return s.coeffs().empty() ? s.trunc() : s.coeffs().begin()->first;
}

// Integer k with k / n == e, if one exists.
std::optional<std::int64_t> key_for(const Rational& e, std::int64_t n) {
  Rational scaled = e * Rational(Integer(static_cast<long>(n)));
  scaled.canonicalize();
  if (!is_integer(scaled)) return std::nullopt;
  return to_int64(scaled.get_num());
}

// Coefficients of prod_{n>=1} (1 - y^n) up to y^len-1, by Euler's pentagonal theorem.
std::vector<int> euler_product(std::size_t len) {
  std::vector<int> a(len, 0);
  if (len > 0) a[0] = 1;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t g1 = k * (3 * k - 1) / 2;
    const std::int64_t g2 = k * (3 * k + 1) / 2;
    if (static_cast<std::size_t>(g1) >= len) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    a[static_cast<std::size_t>(g1)] += sign;
    if (static_cast<std::size_t>(g2) < len) a[static_cast<std::size_t>(g2)] += sign;
  }
  return a;
}

// Coefficients of prod (1 - y^n)^r up to y^len-1. For a power series f with
// f(0) = 1, g = f^r satisfies k g_k = sum_{j=1}^k ((r+1) j - k) f_j g_{k-j}.
std::vector<Integer> euler_product_power(std::size_t len, std::int64_t r) {
  const auto f = euler_product(len);
  std::vector<std::size_t> support;
  for (std::size_t j = 1; j < len; ++j) {
    if (f[j] != 0) support.push_back(j);
  }
  std::vector<Integer> g(len, Integer(0));
  if (len == 0) return g;
  g[0] = 1;
  const Integer r1(static_cast<long>(r + 1));
  for (std::size_t k = 1; k < len; ++k) {
    Integer acc = 0;
    const Integer kk(static_cast<long>(k));
    for (std::size_t j : support) {
      if (j > k) break;
      acc += (r1 * Integer(static_cast<long>(j)) - kk) * f[j] * g[k - j];
    }
    mpz_divexact(g[k].get_mpz_t(), acc.get_mpz_t(), kk.get_mpz_t());
  }
  return g;
}

std::string exponent_string(const Rational& e) {
  if (is_integer(e)) return e.get_num().get_str();
  return "(" + to_string(e) + ")";
}

}  // namespace

std::int64_t max_denominator() { return g_max_denominator.load(); }

void set_max_denominator(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("maximum denominator must be positive");
  g_max_denominator.store(n);
}

FracQSeries::FracQSeries(std::int64_t denom, std::int64_t trunc) : denom_(denom), trunc_(trunc) {
  prune_and_check();
}

FracQSeries::FracQSeries(std::int64_t denom, std::int64_t trunc, Coefficients coeffs)
    : denom_(denom), trunc_(trunc), coeffs_(std::move(coeffs)) {
  prune_and_check();
}

void FracQSeries::prune_and_check() {
  check_denominator(denom_);
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0 || it->first >= trunc_) {
      it = coeffs_.erase(it);
    } else {
      it->second.canonicalize();
      ++it;
    }
  }
}

FracQSeries FracQSeries::monomial(const Rational& c, const Rational& e, const Rational& valid_below) {
  const std::int64_t n = std::lcm(to_int64(Rational(e).get_den()), to_int64(Rational(valid_below).get_den()));
  Coefficients coeffs;
  coeffs.emplace(*key_for(e, n), c);
  return reduce(FracQSeries(n, *key_for(valid_below, n), std::move(coeffs)));
}

FracQSeries FracQSeries::polynomial(const std::vector<Rational>& coeffs, std::int64_t valid_below) {
  Coefficients out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.emplace(static_cast<std::int64_t>(i), coeffs[i]);
  return FracQSeries(1, valid_below, std::move(out));
}

Rational FracQSeries::valid_below() const {
  return make_rational(trunc_, denom_);
}

bool FracQSeries::is_known(const Rational& exponent) const { return exponent < valid_below(); }

Rational FracQSeries::coefficient(const Rational& exponent) const {
  if (!is_known(exponent)) {
    throw BeyondTruncation("coefficient of q^" + to_string(exponent) + " is beyond the truncation q^" +
                           to_string(valid_below()));
  }
  const auto k = key_for(exponent, denom_);
  if (!k) return 0;
  auto it = coeffs_.find(*k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational FracQSeries::coefficient(std::int64_t integer_exponent) const {
  return coefficient(make_rational(integer_exponent));
}

std::optional<Rational> FracQSeries::leading_exponent() const {
  if (coeffs_.empty()) return std::nullopt;
  return make_rational(coeffs_.begin()->first, denom_);
}

FracQSeries FracQSeries::with_denominator(std::int64_t n) const {
  if (n % denom_ != 0) throw std::invalid_argument("new denominator must be a multiple of the old one");
  const std::int64_t f = n / denom_;
  Coefficients out;
  for (const auto& [k, c] : coeffs_) out.emplace(checked(static_cast<__int128>(k) * f), c);
  return FracQSeries(n, checked(static_cast<__int128>(trunc_) * f), std::move(out));
}

FracQSeries FracQSeries::truncated(const Rational& bound) const {
  if (bound > valid_below()) throw BeyondTruncation("cannot extend a truncation");
  const std::int64_t n = std::lcm(denom_, to_int64(Rational(bound).get_den()));
  check_denominator(n);
  const FracQSeries widened = with_denominator(n);
  return reduce(FracQSeries(n, *key_for(bound, n), widened.coeffs_));
}

FracQSeries FracQSeries::integral_part() const {
  Coefficients out;
  for (const auto& [k, c] : coeffs_) {
    if (k % denom_ == 0) out.emplace(k, c);
  }
  return reduce(FracQSeries(denom_, trunc_, std::move(out)));
}

bool FracQSeries::all_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return is_integer(kv.second); });
}

bool operator==(const FracQSeries& a, const FracQSeries& b) {
  const std::int64_t n = std::lcm(a.denom(), b.denom());
  const FracQSeries a2 = a.with_denominator(n);
  const FracQSeries b2 = b.with_denominator(n);
  return a2.trunc() == b2.trunc() && a2.coeffs() == b2.coeffs();
}

FracQSeries operator+(const FracQSeries& a, const FracQSeries& b) {
  const std::int64_t n = lcm_checked(a.denom(), b.denom());
  const FracQSeries a2 = a.with_denominator(n);
  const FracQSeries b2 = b.with_denominator(n);
  FracQSeries::Coefficients out = a2.coeffs();
  for (const auto& [k, c] : b2.coeffs()) out[k] += c;
  return reduce(FracQSeries(n, std::min(a2.trunc(), b2.trunc()), std::move(out)));
}

FracQSeries operator-(const FracQSeries& a) { return Rational(-1) * a; }

FracQSeries operator-(const FracQSeries& a, const FracQSeries& b) { return a + (-b); }

FracQSeries operator*(const Rational& c, const FracQSeries& a) {
  FracQSeries::Coefficients out;
  for (const auto& [k, v] : a.coeffs()) out.emplace(k, c * v);
  return FracQSeries(a.denom(), a.trunc(), std::move(out));
}

FracQSeries operator*(const FracQSeries& a, const FracQSeries& b) {
  const std::int64_t n = lcm_checked(a.denom(), b.denom());
  const FracQSeries a2 = a.with_denominator(n);
  const FracQSeries b2 = b.with_denominator(n);
  const std::int64_t la = leading_key_or_trunc(a2);
  const std::int64_t lb = leading_key_or_trunc(b2);
  const std::int64_t t = std::min(checked(static_cast<__int128>(a2.trunc()) + lb),
                                  checked(static_cast<__int128>(b2.trunc()) + la));
  FracQSeries::Coefficients out;
  for (const auto& [ka, ca] : a2.coeffs()) {
    for (const auto& [kb, cb] : b2.coeffs()) {
      if (ka + kb >= t) break;
      out[ka + kb] += ca * cb;
    }
  }
  return reduce(FracQSeries(n, t, std::move(out)));
}

FracQSeries invert(const FracQSeries& a) {
  if (a.coeffs().empty()) {
    throw std::domain_error("cannot invert a series with no known nonzero coefficient");
  }
  const std::int64_t lead = a.coeffs().begin()->first;
  const Rational c0 = a.coeffs().begin()->second;
  const std::int64_t len = a.trunc() - lead;
  std::vector<std::pair<std::int64_t, Rational>> tail;
  for (const auto& [k, c] : a.coeffs()) {
    if (k != lead) tail.emplace_back(k - lead, c);
  }
  std::vector<Rational> b(static_cast<std::size_t>(len), Rational(0));
  const Rational inv_c0 = 1 / c0;
  b[0] = inv_c0;
  for (std::int64_t m = 1; m < len; ++m) {
    Rational acc = 0;
    for (const auto& [j, aj] : tail) {
      if (j > m) break;
      acc += aj * b[static_cast<std::size_t>(m - j)];
    }
    b[static_cast<std::size_t>(m)] = -inv_c0 * acc;
  }
  FracQSeries::Coefficients out;
  for (std::int64_t m = 0; m < len; ++m) out.emplace(m - lead, b[static_cast<std::size_t>(m)]);
  return reduce(FracQSeries(a.denom(), checked(static_cast<__int128>(a.trunc()) - 2 * static_cast<__int128>(lead)),
                            std::move(out)));
}

FracQSeries pow(const FracQSeries& a, std::int64_t n) {
  if (n < 0) return pow(invert(a), -n);
  if (n == 0) {
    // a^0 = 1, known as far as the relative precision of a.
    const std::int64_t rel = a.trunc() - leading_key_or_trunc(a);
    return reduce(FracQSeries(a.denom(), rel, {{0, Rational(1)}}));
  }
  FracQSeries result = a;
  FracQSeries base = a;
  std::int64_t e = n - 1;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

FracQSeries rescale_q(const FracQSeries& a, const Rational& m) {
  if (m <= 0) throw std::invalid_argument("rescaling exponent must be positive");
  Rational mm = m;
  mm.canonicalize();
  const std::int64_t p = to_int64(mm.get_num());
  const std::int64_t r = to_int64(mm.get_den());
  FracQSeries::Coefficients out;
  for (const auto& [k, c] : a.coeffs()) out.emplace(checked(static_cast<__int128>(k) * p), c);
  const std::int64_t n = checked(static_cast<__int128>(a.denom()) * r);
  const std::int64_t t = checked(static_cast<__int128>(a.trunc()) * p);
  // Reduce before the denominator check: the raw denominator may be a harmless multiple.
  std::int64_t g = std::gcd(n, t);
  for (const auto& kv : out) g = std::gcd(g, kv.first);
  if (g > 1) {
    FracQSeries::Coefficients reduced;
    for (const auto& [k, c] : out) reduced.emplace(k / g, c);
    return FracQSeries(n / g, t / g, std::move(reduced));
  }
  return FracQSeries(n, t, std::move(out));
}

FracQSeries eta_quotient(const std::vector<EtaFactor>& spec, std::int64_t prec) {
  if (prec <= 0) throw std::invalid_argument("precision must be positive");
  std::int64_t h = 1;
  Rational lead = 0;
  for (const auto& f : spec) {
    Rational m = f.m;
    m.canonicalize();
    if (m <= 0) throw std::invalid_argument("eta argument scale must be positive");
    if (m.get_den() != 1 && m.get_den() != 2) {
      throw std::invalid_argument("unsupported eta argument scale " + to_string(m) +
                                  " (only integers and halves)");
    }
    if (m.get_den() == 2) h = 2;
    lead += m * make_rational(f.r, 24);
  }
  lead.canonicalize();
  const std::int64_t n = lcm_checked(to_int64(lead.get_den()), h);
  // Body in x = q^(1/h), relative length prec * h.
  const std::size_t len = static_cast<std::size_t>(prec * h);
  std::vector<Integer> body(len, Integer(0));
  body[0] = 1;
  for (const auto& f : spec) {
    if (f.r == 0) continue;
    Rational scaled = f.m * Rational(Integer(static_cast<long>(h)));
    scaled.canonicalize();
    const std::int64_t step = to_int64(scaled.get_num());
    const std::size_t inner_len = (len + static_cast<std::size_t>(step) - 1) / static_cast<std::size_t>(step);
    const auto factor = euler_product_power(inner_len, f.r);
    std::vector<Integer> next(len, Integer(0));
    for (std::size_t i = 0; i < len; ++i) {
      if (body[i] == 0) continue;
      for (std::size_t j = 0; j < inner_len; ++j) {
        const std::size_t e = i + j * static_cast<std::size_t>(step);
        if (e >= len) break;
        if (factor[j] != 0) next[e] += body[i] * factor[j];
      }
    }
    body = std::move(next);
  }
  const std::int64_t lead_key = *key_for(lead, n);
  const std::int64_t per_x = n / h;
  FracQSeries::Coefficients out;
  for (std::size_t i = 0; i < len; ++i) {
    if (body[i] != 0) out.emplace(lead_key + static_cast<std::int64_t>(i) * per_x, Rational(body[i]));
  }
  return reduce(FracQSeries(n, lead_key + prec * n, std::move(out)));
}

Integer sigma3(std::int64_t n) {
  Integer s = 0;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) {
      Integer dd(static_cast<long>(d));
      s += dd * dd * dd;
    }
  }
  return s;
}

FracQSeries eisenstein_e4(std::int64_t prec) {
  if (prec <= 0) throw std::invalid_argument("precision must be positive");
  FracQSeries::Coefficients out;
  out.emplace(0, Rational(1));
  for (std::int64_t k = 1; k < prec; ++k) out.emplace(k, Rational(240 * sigma3(k)));
  return FracQSeries(1, prec, std::move(out));
}

FracQSeries discriminant_delta(std::int64_t prec) { return eta_quotient({{Rational(1), 24}}, prec); }

FracQSeries weight12_match(const Rational& c0, const Rational& c1, std::int64_t prec) {
  if (prec <= 0) throw std::invalid_argument("precision must be positive");
  const FracQSeries e4_cubed = pow(eisenstein_e4(prec), 3);
  const FracQSeries delta = discriminant_delta(std::max<std::int64_t>(prec - 1, 1));
  const FracQSeries sum = c0 * e4_cubed + (c1 - 720 * c0) * delta;
  return sum.truncated(make_rational(prec));
}

FracQSeries char_lattice_voa(const FracQSeries& theta, std::int64_t d) {
  if (d <= 0) throw std::invalid_argument("rank must be positive");
  if (theta.coefficient(make_rational(0)) != 1 || theta.leading_exponent() != make_rational(0)) {
    throw std::invalid_argument("theta series must start with constant term 1");
  }
  const std::int64_t prec = to_int64(ceil(theta.valid_below())) + 1;
  return theta * eta_quotient({{Rational(1), -d}}, prec);
}

std::string to_text(const FracQSeries& s) {
  std::ostringstream out;
  out << s.denom() << ' ' << s.trunc() << '\n';
  for (const auto& [k, c] : s.coeffs()) out << k << ' ' << to_fraction_string(c) << '\n';
  return out.str();
}

FracQSeries parse_series(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::int64_t denom = 0;
  std::int64_t trunc = 0;
  if (!(in >> denom >> trunc) || denom <= 0) throw std::invalid_argument("malformed series header");
  FracQSeries::Coefficients coeffs;
  std::int64_t k = 0;
  std::string value;
  std::optional<std::int64_t> previous;
  while (in >> k) {
    if (!(in >> value)) throw std::invalid_argument("series line without a coefficient");
    if (previous && k <= *previous) throw std::invalid_argument("series exponents must be strictly increasing");
    if (k >= trunc) throw std::invalid_argument("series term at or beyond the truncation");
    previous = k;
    coeffs.emplace(k, parse_rational(value));
  }
  if (!in.eof()) throw std::invalid_argument("malformed series line");
  return FracQSeries(denom, trunc, std::move(coeffs));
}

std::string to_display(const FracQSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : s.coeffs()) {
    const Rational e = make_rational(k, s.denom());
    Rational mag = abs(c);
    const bool negative = c < 0;
    if (first) {
      out << (negative ? "-" : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << '*';
    out << "q";
    if (e != 1) out << '^' << exponent_string(e);
  }
  out << (first ? "" : " + ") << "O(q^" << exponent_string(s.valid_below()) << ")";
  return out.str();
}

}  // namespace vnat::qseries
